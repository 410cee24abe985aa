"""Z-orders presented by integer structure constants.

An order of dimension n is a free Z-module Z^n with a bilinear multiplication
``table[i][j]`` = coordinates of b_i * b_j, an identity vector, and optional
basis names.  Construction validates the ring axioms (associativity, the
identity law, primitivity of the identity vector); everything downstream may
assume a valid order.

Elements carry Fraction coordinates so the same type serves for points of the
ambient Q-algebra B = A (x) Q; membership in A is just integrality of the
coordinates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from pathlib import Path
from typing import Sequence, Union

from .errors import (
    DimensionMismatchError,
    MalformedInputError,
    NoIdentityError,
    NonAssociativeError,
    PruferError,
    UnitLineError,
)
from .linalg import charpoly, solve_right
from .poly import RationalPolynomial

Coords = tuple[Fraction, ...]


@dataclass(frozen=True)
class AlgebraElement:
    """An element of the ambient Q-algebra of some order, as coordinates."""

    coords: Coords

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    @property
    def denominator(self) -> int:
        return lcm(*(c.denominator for c in self.coords)) if self.coords else 1

    @property
    def is_integral_vector(self) -> bool:
        """Integer coordinates, i.e. membership in the order's lattice Z^n."""
        return all(c.denominator == 1 for c in self.coords)

    def scaled(self, k) -> "AlgebraElement":
        k = Fraction(k)
        return AlgebraElement(tuple(c * k for c in self.coords))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if self.dim != other.dim:
            raise DimensionMismatchError("adding elements of different dimensions")
        return AlgebraElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scaled(-1)

    def __neg__(self) -> "AlgebraElement":
        return self.scaled(-1)


def element(coords: Sequence) -> AlgebraElement:
    return AlgebraElement(tuple(Fraction(c) for c in coords))


@dataclass(frozen=True)
class ZOrder:
    """A torsion-free Z-order given by structure constants."""

    dim: int
    table: tuple[tuple[tuple[int, ...], ...], ...]
    one: tuple[int, ...]
    basis_names: tuple[str, ...] | None = None

    def __post_init__(self):
        n = self.dim
        object.__setattr__(self, "table", tuple(tuple(tuple(int(c) for c in cell) for cell in row) for row in self.table))
        object.__setattr__(self, "one", tuple(int(c) for c in self.one))
        if self.basis_names is None:
            object.__setattr__(self, "basis_names", tuple(f"b{i}" for i in range(n)))
        else:
            object.__setattr__(self, "basis_names", tuple(str(s) for s in self.basis_names))
        if n < 1:
            raise MalformedInputError("MALFORMED_INPUT: dimension must be at least 1")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise MalformedInputError("MALFORMED_INPUT: table is not dim x dim")
        if any(len(cell) != n for row in self.table for cell in row):
            raise MalformedInputError("MALFORMED_INPUT: table entries are not coordinate vectors of length dim")
        if len(self.one) != n:
            raise MalformedInputError("MALFORMED_INPUT: identity vector has wrong length")
        if len(self.basis_names) != n:
            raise MalformedInputError("MALFORMED_INPUT: basis_names has wrong length")
        if gcd(*self.one) not in (1,):
            raise UnitLineError("UNIT_LINE_NOT_SATURATED: identity coordinates have a common factor")
        self._check_identity()
        self._check_associativity()

    def _mul_coords(self, x: Sequence, y: Sequence) -> list:
        out = [0] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self.table[i]
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                c = xi * yj
                for k, t in enumerate(row[j]):
                    if t:
                        out[k] += c * t
        return out

    def _check_identity(self):
        for j in range(self.dim):
            basis = [1 if i == j else 0 for i in range(self.dim)]
            left = self._mul_coords(self.one, basis)
            right = self._mul_coords(basis, self.one)
            if left != basis or right != basis:
                raise NoIdentityError(f"NO_IDENTITY: identity law fails on basis vector {j}")

    def _check_associativity(self):
        n = self.dim
        for i in range(n):
            for j in range(n):
                ij = self.table[i][j]
                for k in range(n):
                    left = self._mul_coords(ij, [1 if t == k else 0 for t in range(n)])
                    right = self._mul_coords([1 if t == i else 0 for t in range(n)], self.table[j][k])
                    if left != right:
                        raise NonAssociativeError(
                            f"NON_ASSOCIATIVE: (b{i}*b{j})*b{k} != b{i}*(b{j}*b{k})"
                        )

    # -- elements ---------------------------------------------------------

    def zero(self) -> AlgebraElement:
        return AlgebraElement((Fraction(0),) * self.dim)

    def identity(self) -> AlgebraElement:
        return AlgebraElement(tuple(Fraction(c) for c in self.one))

    def basis_element(self, i: int) -> AlgebraElement:
        return AlgebraElement(tuple(Fraction(1 if j == i else 0) for j in range(self.dim)))

    def basis(self) -> list[AlgebraElement]:
        return [self.basis_element(i) for i in range(self.dim)]


OrderSource = Union[dict, str, Path]


def load_order(source: OrderSource) -> ZOrder:
    """Build a validated ZOrder from a dict or a JSON file path."""
    if isinstance(source, (str, Path)):
        try:
            with open(source, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
        except OSError as exc:
            raise MalformedInputError(f"MALFORMED_INPUT: cannot read {source}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise MalformedInputError(f"MALFORMED_INPUT: invalid JSON in {source}: {exc}") from exc
    elif isinstance(source, dict):
        doc = source
    else:
        raise MalformedInputError(f"MALFORMED_INPUT: unsupported source {type(source).__name__}")
    if not isinstance(doc, dict):
        raise MalformedInputError("MALFORMED_INPUT: top-level JSON value must be an object")
    missing = [key for key in ("dim", "one", "table") if key not in doc]
    if missing:
        raise MalformedInputError(f"MALFORMED_INPUT: missing fields {missing}")
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise MalformedInputError("MALFORMED_INPUT: dim must be an integer")
    names = doc.get("basis_names")
    if names is None:
        names = [f"b{i}" for i in range(dim)]
    if not isinstance(names, list) or not all(isinstance(s, str) for s in names):
        raise MalformedInputError("MALFORMED_INPUT: basis_names must be a list of strings")

    def as_int_vector(v, what):
        if not isinstance(v, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in v):
            raise MalformedInputError(f"MALFORMED_INPUT: {what} must be a list of integers")
        return tuple(v)

    one = as_int_vector(doc["one"], "one")
    table = doc["table"]
    if not isinstance(table, list) or not all(isinstance(row, list) for row in table):
        raise MalformedInputError("MALFORMED_INPUT: table must be a list of lists")
    tab = tuple(
        tuple(as_int_vector(cell, f"table[{i}][{j}]") for j, cell in enumerate(row))
        for i, row in enumerate(table)
    )
    return ZOrder(dim=dim, table=tab, one=one, basis_names=tuple(names))


def order_to_dict(order: ZOrder) -> dict:
    return {
        "dim": order.dim,
        "basis_names": list(order.basis_names),
        "one": list(order.one),
        "table": [[list(cell) for cell in row] for row in order.table],
    }


# -- arithmetic in the ambient algebra -------------------------------------


def mul(order: ZOrder, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if x.dim != order.dim or y.dim != order.dim:
        raise DimensionMismatchError("element dimension does not match the order")
    return AlgebraElement(tuple(order._mul_coords(x.coords, y.coords)))


def power(order: ZOrder, x: AlgebraElement, k: int) -> AlgebraElement:
    if k < 0:
        raise ValueError("negative powers are not defined in an order")
    result = order.identity()
    base = x
    while k:
        if k & 1:
            result = mul(order, result, base)
        base = mul(order, base, base) if k > 1 else base
        k >>= 1
    return result


def evaluate_poly(order: ZOrder, f: RationalPolynomial, x: AlgebraElement) -> AlgebraElement:
    """f(x) in the ambient algebra, by Horner."""
    acc = order.zero()
    for c in reversed(f.coefficients):
        acc = mul(order, acc, x) + order.identity().scaled(c)
    return acc


def left_regular_matrix(order: ZOrder, x: AlgebraElement) -> list[list[Fraction]]:
    """Matrix M with M[i][j] = coordinate i of x * b_j (so M acts on columns)."""
    cols = [mul(order, x, order.basis_element(j)).coords for j in range(order.dim)]
    return [[cols[j][i] for j in range(order.dim)] for i in range(order.dim)]


def trace(order: ZOrder, x: AlgebraElement) -> Fraction:
    m = left_regular_matrix(order, x)
    return sum((m[i][i] for i in range(order.dim)), Fraction(0))


def characteristic_polynomial(order: ZOrder, x: AlgebraElement) -> RationalPolynomial:
    return RationalPolynomial(charpoly(left_regular_matrix(order, x)))


def minimal_polynomial(order: ZOrder, x: AlgebraElement) -> RationalPolynomial:
    """Monic least-degree polynomial killing x in the ambient algebra.

    Builds powers of x until they become linearly dependent; the first
    dependency gives the (unique) monic relation.
    """
    if x.dim != order.dim:
        raise DimensionMismatchError("element dimension does not match the order")
    powers: list[Coords] = [order.identity().coords]
    current = order.identity()
    for k in range(1, order.dim + 2):
        current = mul(order, current, x)
        cols = [[powers[i][row] for i in range(len(powers))] for row in range(order.dim)]
        sol = solve_right(cols, list(current.coords))
        if sol is not None:
            coeffs = [-c for c in sol] + [Fraction(1)]
            return RationalPolynomial(coeffs)
        powers.append(current.coords)
    raise PruferError("no linear dependency among element powers; invalid order")


def trace_gram_matrix(order: ZOrder) -> list[list[int]]:
    """Gram matrix of the trace form, G[i][j] = Tr(L_{b_i b_j}); integer."""
    n = order.dim
    traces = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = AlgebraElement(tuple(order.table[i][j]))
            t = trace(order, prod)
            if t.denominator != 1:
                raise PruferError("trace form of an integer order came out non-integral")
            row.append(int(t))
        traces.append(row)
    return traces


def is_commutative(order: ZOrder) -> tuple[bool, tuple[AlgebraElement, AlgebraElement] | None]:
    """(True, None), or (False, (x, y)) with x*y != y*x; x, y basis vectors."""
    for i in range(order.dim):
        for j in range(i + 1, order.dim):
            if order.table[i][j] != order.table[j][i]:
                return False, (order.basis_element(i), order.basis_element(j))
    return True, None


def jacobson_radical_basis(order: ZOrder) -> list[AlgebraElement]:
    """Basis of the radical of the ambient algebra (char 0: the kernel of the
    trace form).  Vectors are scaled to primitive integer coordinates."""
    from .linalg import right_kernel

    gram = trace_gram_matrix(order)
    kernel = right_kernel(gram)
    out = []
    for v in kernel:
        d = lcm(*(c.denominator for c in v)) if v else 1
        ints = [int(c * d) for c in v]
        g = 0
        for c in ints:
            g = gcd(g, c)
        if g > 1:
            ints = [c // g for c in ints]
        out.append(AlgebraElement(tuple(Fraction(c) for c in ints)))
    return out


REDUCED = "reduced"
NOT_REDUCED = "not_reduced"
UNDECIDED_SEMISIMPLE = "undecided_semisimple"


@dataclass(frozen=True)
class Reducedness:
    """Outcome of the reducedness test.

    status is one of REDUCED, NOT_REDUCED, UNDECIDED_SEMISIMPLE; a
    NOT_REDUCED result carries a nilpotent witness and the exponent k with
    witness^k = 0.
    """

    status: str
    witness: AlgebraElement | None = None
    nilpotency: int | None = None


def is_reduced(order: ZOrder) -> Reducedness:
    """Decide reducedness via the trace form.

    In characteristic zero the radical of the trace form is the Jacobson
    radical, and any nonzero radical element of a finite-dimensional algebra
    is nilpotent, so a nonzero kernel always yields an honest witness.  A
    noncommutative algebra with zero radical may still contain nilpotents
    that this test cannot see; that case is reported as undecided.
    """
    radical = jacobson_radical_basis(order)
    if radical:
        witness = radical[0]
        current = witness
        for k in range(2, order.dim + 2):
            current = mul(order, current, witness)
            if current.is_zero:
                return Reducedness(NOT_REDUCED, witness, k)
        raise PruferError("radical element is not nilpotent; invalid order")
    commutative, _ = is_commutative(order)
    if commutative:
        return Reducedness(REDUCED)
    return Reducedness(UNDECIDED_SEMISIMPLE)


def product_order(a: ZOrder, b: ZOrder) -> ZOrder:
    """Direct product, basis of a followed by basis of b."""
    n, m = a.dim, b.dim
    dim = n + m
    zero = tuple(0 for _ in range(dim))

    def embed_a(v):
        return tuple(v) + (0,) * m

    def embed_b(v):
        return (0,) * n + tuple(v)

    table = []
    for i in range(dim):
        row = []
        for j in range(dim):
            if i < n and j < n:
                row.append(embed_a(a.table[i][j]))
            elif i >= n and j >= n:
                row.append(embed_b(b.table[i - n][j - n]))
            else:
                row.append(zero)
        table.append(tuple(row))
    names = tuple(f"{name}.l" for name in a.basis_names) + tuple(f"{name}.r" for name in b.basis_names)
    return ZOrder(dim=dim, table=tuple(table), one=embed_a(a.one)[:n] + embed_b(b.one)[n:], basis_names=names)


def equation_order(f: RationalPolynomial) -> ZOrder:
    """The order Z[X]/(f) on the power basis 1, x, ..., x^(d-1).

    f must be monic with integer coefficients; the structure constants are the
    coefficients of X^(i+j) reduced mod f, which stay integral because the
    division is by a monic integer polynomial.
    """
    if f.degree < 1:
        raise MalformedInputError("MALFORMED_INPUT: equation order needs degree >= 1")
    if not (f.is_monic and f.has_integer_coefficients):
        raise MalformedInputError("MALFORMED_INPUT: equation order needs a monic integer polynomial")
    d = f.degree

    def reduced_coords(k: int) -> Coords:
        rem = RationalPolynomial.x_power(k) % f
        cs = rem.coefficients
        return tuple(cs) + (Fraction(0),) * (d - len(cs))

    powers = [reduced_coords(k) for k in range(2 * d - 1)]
    table = tuple(tuple(powers[i + j] for j in range(d)) for i in range(d))
    one = (1,) + (0,) * (d - 1)
    names = ("1",) + tuple(f"x^{k}" if k > 1 else "x" for k in range(1, d))
    return ZOrder(dim=d, table=table, one=one, basis_names=names)
