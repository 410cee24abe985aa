"""Dense univariate polynomials over Q.

A polynomial is stored as a tuple of integer coefficients (ascending powers,
no trailing zeros) plus one positive common denominator, kept coprime to the
coefficient gcd.  The public surface speaks ``Fraction``; the integer view is
what factorization and residue arithmetic want, and it falls out for free.

The text format used by the CLI and by certificates writes ascending terms:
``-4 - 2*X + X^2``.  The parser is a little more lenient than the writer
(spaces and ``*`` optional).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

from .errors import MalformedInputError, ZeroPolynomialError

Scalar = Union[int, Fraction]


def _normalize(nums: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    if den == 0:
        raise ZeroDivisionError("polynomial denominator is zero")
    nums = list(nums)
    while nums and nums[-1] == 0:
        nums.pop()
    if not nums:
        return (), 1
    if den < 0:
        den = -den
        nums = [-c for c in nums]
    g = den
    for c in nums:
        g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        den //= g
        nums = [c // g for c in nums]
    return tuple(nums), den


class RationalPolynomial:
    """Immutable univariate polynomial with exact rational coefficients."""

    __slots__ = ("_num", "_den")

    def __init__(self, coefficients: Iterable[Scalar] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        den = 1
        for c in coeffs:
            den = lcm(den, c.denominator)
        nums = [int(c * den) for c in coeffs]
        self._num, self._den = _normalize(nums, den)

    @classmethod
    def _raw(cls, nums: Sequence[int], den: int) -> "RationalPolynomial":
        p = object.__new__(cls)
        p._num, p._den = _normalize(nums, den)
        return p

    @classmethod
    def from_int_coeffs(cls, nums: Sequence[int], den: int = 1) -> "RationalPolynomial":
        return cls._raw([int(c) for c in nums], int(den))

    @classmethod
    def constant(cls, c: Scalar) -> "RationalPolynomial":
        return cls([c])

    @classmethod
    def x_power(cls, k: int) -> "RationalPolynomial":
        return cls._raw([0] * k + [1], 1)

    zero_poly: "RationalPolynomial"
    one_poly: "RationalPolynomial"
    x_poly: "RationalPolynomial"

    # -- views ------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self._num) - 1

    @property
    def is_zero(self) -> bool:
        return not self._num

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def integer_numerators(self) -> tuple[int, ...]:
        """Coefficients of den * self; content coprime to den."""
        return self._num

    @property
    def denominator(self) -> int:
        """Smallest d >= 1 with d * self integer-coefficient."""
        return self._den

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._num:
            return Fraction(0)
        return Fraction(self._num[-1], self._den)

    @property
    def is_monic(self) -> bool:
        return bool(self._num) and self._num[-1] == self._den

    @property
    def has_integer_coefficients(self) -> bool:
        return self._den == 1

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self._num):
            return Fraction(self._num[k], self._den)
        return Fraction(0)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> "RationalPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = lcm(self._den, other._den)
        sa, sb = d // self._den, d // other._den
        n = max(len(self._num), len(other._num))
        nums = [0] * n
        for i, c in enumerate(self._num):
            nums[i] += c * sa
        for i, c in enumerate(other._num):
            nums[i] += c * sb
        return RationalPolynomial._raw(nums, d)

    __radd__ = __add__

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial._raw([-c for c in self._num], self._den)

    def __sub__(self, other) -> "RationalPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RationalPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RationalPolynomial._raw((), 1)
        a, b = self._num, other._num
        nums = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    nums[i + j] += ca * cb
        return RationalPolynomial._raw(nums, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "RationalPolynomial":
        s = Fraction(scalar)
        if s == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        return RationalPolynomial._raw(
            [c * s.denominator for c in self._num], self._den * s.numerator
        )

    def __pow__(self, k: int) -> "RationalPolynomial":
        if k < 0:
            raise ValueError("negative polynomial power")
        result = RationalPolynomial._raw((1,), 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __divmod__(self, other) -> tuple["RationalPolynomial", "RationalPolynomial"]:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        div = other.coefficients
        dq = len(rem) - len(div)
        if dq < 0:
            return RationalPolynomial._raw((), 1), self
        inv_lead = 1 / div[-1]
        quot = [Fraction(0)] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + len(div) - 1] * inv_lead
            quot[k] = c
            if c:
                for j, dcoef in enumerate(div):
                    rem[k + j] -= c * dcoef
        return RationalPolynomial(quot), RationalPolynomial(rem[: len(div) - 1])

    def __floordiv__(self, other) -> "RationalPolynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "RationalPolynomial":
        return divmod(self, other)[1]

    def divides(self, other: "RationalPolynomial") -> bool:
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial._raw([i * c for i, c in enumerate(self._num)][1:], self._den)

    def monic(self) -> "RationalPolynomial":
        if self.is_zero:
            raise ZeroPolynomialError("the zero polynomial has no monic associate")
        lead = self._num[-1]
        return RationalPolynomial._raw([c * (1 if lead > 0 else -1) for c in self._num], abs(lead))

    def evaluate(self, x: Scalar) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self._num):
            acc = acc * x + c
        return acc / self._den

    def __call__(self, x: Scalar) -> Fraction:
        return self.evaluate(x)

    def compose(self, inner: "RationalPolynomial") -> "RationalPolynomial":
        """self(inner(X)) by Horner on polynomial coefficients."""
        acc = RationalPolynomial._raw((), 1)
        for c in reversed(self._num):
            acc = acc * inner + RationalPolynomial([Fraction(c, self._den)])
        return acc

    def shift(self, a: Scalar) -> "RationalPolynomial":
        """self(X + a)."""
        return self.compose(RationalPolynomial([a, 1]))

    def content_and_primitive(self) -> tuple[Fraction, tuple[int, ...]]:
        """Write self = c * P with P primitive integer-coefficient, lc(P) > 0."""
        if self.is_zero:
            raise ZeroPolynomialError("the zero polynomial has no primitive part")
        sign = 1 if self._num[-1] > 0 else -1
        g = 0
        for c in self._num:
            g = gcd(g, c)
        return Fraction(sign * g, self._den), tuple(sign * c // g for c in self._num)

    # -- text format ------------------------------------------------------

    _TERM_RE = re.compile(
        r"^([+-]?)(?:(\d+(?:/\d+)?))?(?:\*?(X)(?:\^(\d+))?)?$"
    )

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        pieces: list[str] = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                xpart = "X" if k == 1 else f"X^{k}"
                body = xpart if mag == 1 else f"{mag}*{xpart}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    @classmethod
    def parse(cls, text: str) -> "RationalPolynomial":
        if re.search(r"\d\s+[\d/]", text) or re.search(r"\^\s", text):
            # "X^2 2" must not silently glue into "X^22"
            raise MalformedInputError(f"PARSE_ERROR: ambiguous whitespace in {text!r}")
        compact = text.replace(" ", "")
        if not compact:
            raise MalformedInputError("PARSE_ERROR: empty polynomial text")
        if compact == "0":
            return cls._raw((), 1)
        terms = re.findall(r"[+-]?[^+-]+", compact)
        if "".join(terms) != compact:
            raise MalformedInputError(f"PARSE_ERROR: cannot tokenize {text!r}")
        coeffs: dict[int, Fraction] = {}
        for term in terms:
            m = cls._TERM_RE.match(term)
            if not m or (m.group(2) is None and m.group(3) is None):
                raise MalformedInputError(f"PARSE_ERROR: bad term {term!r} in {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            try:
                coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            except ZeroDivisionError as exc:
                raise MalformedInputError(f"PARSE_ERROR: bad coefficient in {term!r}") from exc
            if m.group(3) is None:
                power = 0
            elif m.group(4) is not None:
                power = int(m.group(4))
            else:
                power = 1
            coeffs[power] = coeffs.get(power, Fraction(0)) + sign * coef
        out = [Fraction(0)] * (max(coeffs) + 1)
        for k, c in coeffs.items():
            out[k] = c
        return cls(out)

    # -- plumbing ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __repr__(self) -> str:
        return f"RationalPolynomial({self})"

    def sort_key(self) -> tuple:
        return (self.degree, self.coefficients)


def _coerce(value) -> "RationalPolynomial":
    if isinstance(value, RationalPolynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return RationalPolynomial([value])
    return NotImplemented


RationalPolynomial.zero_poly = RationalPolynomial._raw((), 1)
RationalPolynomial.one_poly = RationalPolynomial._raw((1,), 1)
RationalPolynomial.x_poly = RationalPolynomial._raw((0, 1), 1)


def poly_gcd(a: RationalPolynomial, b: RationalPolynomial) -> RationalPolynomial:
    """Monic gcd over Q (gcd(0, 0) = 0)."""
    while not b.is_zero:
        a, b = b, a % b
    if a.is_zero:
        return a
    return a.monic()


def poly_xgcd(
    a: RationalPolynomial, b: RationalPolynomial
) -> tuple[RationalPolynomial, RationalPolynomial, RationalPolynomial]:
    """(g, s, t) with s*a + t*b = g, g the monic gcd."""
    r0, r1 = a, b
    s0, s1 = RationalPolynomial.one_poly, RationalPolynomial.zero_poly
    t0, t1 = RationalPolynomial.zero_poly, RationalPolynomial.one_poly
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    lead = r0.leading_coefficient
    return r0 / lead, s0 / lead, t0 / lead


def squarefree_part(f: RationalPolynomial) -> RationalPolynomial:
    """Monic product of the distinct irreducible factors of f."""
    if f.is_zero:
        raise ZeroPolynomialError("squarefree part of the zero polynomial")
    if f.degree <= 0:
        return RationalPolynomial.one_poly
    return (f // poly_gcd(f, f.derivative())).monic()


def squarefree_decomposition(f: RationalPolynomial) -> list[tuple[RationalPolynomial, int]]:
    """Yun's algorithm: f = lc * prod g_i^i with the g_i monic, squarefree,
    pairwise coprime.  Returns the (g_i, i) with positive degree."""
    if f.is_zero:
        raise ZeroPolynomialError("squarefree decomposition of the zero polynomial")
    u = f.monic()
    if u.degree == 0:
        return []
    df = u.derivative()
    a = poly_gcd(u, df)
    b = u // a
    c = df // a
    d = c - b.derivative()
    out: list[tuple[RationalPolynomial, int]] = []
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
        b = b // g
        c = d // g
        d = c - b.derivative()
        i += 1
    return out
