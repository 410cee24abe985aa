"""Factorization of univariate polynomials over Q, from scratch.

Pipeline for a squarefree primitive integer polynomial F:

1. scale to a monic integer polynomial G(X) = l^(n-1) * F(X/l), l = lc(F);
2. pick a small odd prime p where G stays squarefree mod p;
3. Berlekamp over F_p with exhaustive gcd splitting (deterministic);
4. quadratic Hensel lifting of the factor tree until the modulus clears
   twice the Landau-Mignotte coefficient bound;
5. subset recombination with exact integer division tests;
6. map factors of G back to factors of F by primitive parts of g(l*X).

Everything is dense lists of ints, ascending powers.  The degree cap keeps
the subset stage honest; inputs here are minimal polynomials of elements of
small orders, so the cap is generous.
"""

from __future__ import annotations

from itertools import combinations
from math import comb, gcd, isqrt
from typing import Sequence

from .errors import FactorDegreeError, PruferError, ZeroPolynomialError
from .linalg import modp_left_kernel
from .poly import RationalPolynomial, squarefree_decomposition

FACTOR_DEGREE_CAP = 32


# -- arithmetic in (Z/m)[x], dense ascending coefficient lists --------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_add(a: list[int], b: list[int], m: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % m
    for i in range(len(b), n):
        out[i] %= m
    return _trim(out)


def _zp_sub(a: list[int], b: list[int], m: int) -> list[int]:
    return _zp_add(a, [-c for c in b], m)


def _zp_mul(a: list[int], b: list[int], m: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim([c % m for c in out])

def _zp_scale(a: list[int], k: int, m: int) -> list[int]:
    return _trim([(c * k) % m for c in a])


def _zp_divmod_monic(a: list[int], b: list[int], m: int) -> tuple[list[int], list[int]]:
    """Divide by a monic polynomial over Z/m (valid for any modulus)."""
    if not b or b[-1] % m != 1:
        raise PruferError("modular division needs a monic divisor")
    a = [c % m for c in a]
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], _trim(a)
    quot = [0] * (len(a) - db)
    for k in range(len(a) - db - 1, -1, -1):
        c = a[k + db] % m
        quot[k] = c
        if c:
            for j in range(db + 1):
                a[k + j] = (a[k + j] - c * b[j]) % m
    return _trim(quot), _trim(a[:db])


def _gp_monic(a: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    if not a:
        return a
    inv = pow(a[-1], p - 2, p)
    return [(c * inv) % p for c in a]


def _gp_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("modular polynomial division by zero")
    inv = pow(b[-1], p - 2, p)
    bm = [(c * inv) % p for c in b]
    q, r = _zp_divmod_monic(a, bm, p)
    return _zp_scale(q, inv, p), r


def _gp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, _gp_divmod(a, b, p)[1]
    return _gp_monic(a, p)


def _gp_xgcd(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int], list[int]]:
    """(g, s, t) with s*a + t*b = g (g monic) over F_p."""
    r0, r1 = _trim([c % p for c in a]), _trim([c % p for c in b])
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _zp_sub(s0, _zp_mul(q, s1, p), p)
        t0, t1 = t1, _zp_sub(t0, _zp_mul(q, t1, p), p)
    if not r0:
        return [], s0, t0
    inv = pow(r0[-1], p - 2, p)
    return _zp_scale(r0, inv, p), _zp_scale(s0, inv, p), _zp_scale(t0, inv, p)


def _gp_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    return _gp_divmod(_zp_mul(a, b, p), f, p)[1]


def _gp_powmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _gp_divmod(a, f, p)[1]
    while e:
        if e & 1:
            result = _gp_mulmod(result, base, f, p)
        base = _gp_mulmod(base, base, f, p)
        e >>= 1
    return result


def _gp_deriv(a: list[int], p: int) -> list[int]:
    return _trim([(i * c) % p for i, c in enumerate(a)][1:])


def _berlekamp(f: list[int], p: int) -> list[list[int]]:
    """Monic irreducible factors of a monic squarefree f over F_p."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    xp = _gp_powmod([0, 1], p, f, p)
    rows = []
    cur = [1]
    for _ in range(n):
        rows.append(list(cur) + [0] * (n - len(cur)))
        cur = _gp_mulmod(cur, xp, f, p)
    frobenius = [[(rows[i][j] - (1 if i == j else 0)) % p for j in range(n)] for i in range(n)]
    kernel = modp_left_kernel(frobenius, p)
    r = len(kernel)
    if r == 1:
        return [f]
    factors = [f]
    for v in kernel:
        if len(factors) == r:
            break
        vpoly = _trim(list(v))
        if len(vpoly) <= 1:
            continue
        for s in range(p):
            if len(factors) == r:
                break
            vs = list(vpoly)
            vs[0] = (vs[0] - s) % p
            vs = _trim(vs)
            refined = []
            for u in factors:
                if len(u) - 1 <= 1:
                    refined.append(u)
                    continue
                g = _gp_gcd(u, vs, p)
                if 0 < len(g) - 1 < len(u) - 1:
                    refined.append(g)
                    refined.append(_gp_divmod(u, g, p)[0])
                else:
                    refined.append(u)
            factors = refined
    if len(factors) != r:
        raise PruferError("Berlekamp splitting did not reach the factor count")
    return sorted((_gp_monic(u, p) for u in factors), key=lambda u: (len(u), tuple(u)))


# -- Hensel lifting ---------------------------------------------------------


def _hensel_step(
    f: list[int], g: list[int], h: list[int], s: list[int], t: list[int], q: int
) -> tuple[list[int], list[int], list[int], list[int]]:
    """One quadratic lift: from (mod q) data to (mod q^2); f, g, h monic."""
    q2 = q * q
    fm = [c % q2 for c in f]
    e = _zp_sub(fm, _zp_mul(g, h, q2), q2)
    qq, rr = _zp_divmod_monic(_zp_mul(s, e, q2), h, q2)
    g_new = _zp_add(_zp_add(g, _zp_mul(t, e, q2), q2), _zp_mul(qq, g, q2), q2)
    h_new = _zp_add(h, rr, q2)
    if len(g_new) != len(g) or len(h_new) != len(h):
        raise PruferError("Hensel step changed a factor degree")
    b = _zp_sub(_zp_add(_zp_mul(s, g_new, q2), _zp_mul(t, h_new, q2), q2), [1], q2)
    cc, dd = _zp_divmod_monic(_zp_mul(s, b, q2), h_new, q2)
    s_new = _zp_sub(s, dd, q2)
    t_new = _zp_sub(_zp_sub(t, _zp_mul(t, b, q2), q2), _zp_mul(cc, g_new, q2), q2)
    return g_new, h_new, s_new, t_new


def _hensel_lift_tree(f: list[int], factors: list[list[int]], p: int, target: int) -> list[list[int]]:
    """Lift a coprime monic factorization of f mod p to the first modulus
    p^(2^k) >= target.  ``f`` is monic with coefficients already reduced
    modulo that final modulus (or plain integers)."""
    if len(factors) == 1:
        final = p
        while final < target:
            final *= final
        return [_trim([c % final for c in f])]
    mid = len(factors) // 2
    left, right = factors[:mid], factors[mid:]
    g = [1]
    for u in left:
        g = _zp_mul(g, u, p)
    h = [1]
    for u in right:
        h = _zp_mul(h, u, p)
    one, s, t = _gp_xgcd(g, h, p)
    if one != [1]:
        raise PruferError("Hensel tree halves are not coprime")
    q = p
    while q < target:
        g, h, s, t = _hensel_step(f, g, h, s, t, q)
        q *= q
    return _hensel_lift_tree(g, left, p, target) + _hensel_lift_tree(h, right, p, target)


# -- integer polynomial helpers ---------------------------------------------


def _int_divmod(a: list[int], b: list[int]) -> tuple[list[int], list[int]] | None:
    """Exact-arithmetic division over Z when lc(b) = +-1; None on failure."""
    if not b:
        return None
    lead = b[-1]
    if lead not in (1, -1):
        raise PruferError("integer division wants a unit leading coefficient")
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], list(a)
    quot = [0] * (len(a) - db)
    for k in range(len(a) - db - 1, -1, -1):
        c = a[k + db] * lead
        quot[k] = c
        if c:
            for j in range(db + 1):
                a[k + j] -= c * b[j]
    return _trim(quot), _trim(a[:db])


def _content(a: list[int]) -> int:
    g = 0
    for c in a:
        g = gcd(g, c)
    return g


def _primitive(a: list[int]) -> list[int]:
    g = _content(a)
    if g == 0:
        return []
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _symmetric(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


_PRIME_WHEEL_LIMIT = 100000


def _small_primes():
    yield 3
    n = 5
    while n < _PRIME_WHEEL_LIMIT:
        for d in range(3, isqrt(n) + 1, 2):
            if n % d == 0:
                break
        else:
            yield n
        n += 2


def _factor_squarefree_monic_int(g_coeffs: list[int]) -> list[list[int]]:
    """Irreducible monic integer factors of a monic squarefree integer poly."""
    n = len(g_coeffs) - 1
    if n <= 1:
        return [list(g_coeffs)]
    chosen = None
    for p in _small_primes():
        gp = _trim([c % p for c in g_coeffs])
        if len(gp) - 1 != n:
            continue
        if len(_gp_gcd(gp, _gp_deriv(gp, p), p)) - 1 == 0:
            chosen = p
            break
    if chosen is None:
        raise PruferError("no squarefree reduction prime found")
    p = chosen
    modular = _berlekamp(_gp_monic([c % p for c in g_coeffs], p), p)
    if len(modular) == 1:
        return [list(g_coeffs)]
    norm2 = isqrt(sum(c * c for c in g_coeffs)) + 1
    bound = comb(n, n // 2) * norm2 + 1
    target = 2 * bound + 1
    final_mod = p
    while final_mod < target:
        final_mod *= final_mod
    lifted = _hensel_lift_tree(g_coeffs, modular, p, target)
    # Subset recombination against the remaining cofactor.
    remaining = list(g_coeffs)
    pool = lifted
    found: list[list[int]] = []
    size = 1
    while 2 * size <= len(pool):
        hit = False
        for combo in combinations(range(len(pool)), size):
            cand = [1]
            for i in combo:
                cand = _zp_mul(cand, pool[i], final_mod)
            cand = _trim([_symmetric(c, final_mod) for c in cand])
            division = _int_divmod(remaining, cand)
            if division is None:
                continue
            quot, rem = division
            if rem:
                continue
            found.append(cand)
            remaining = quot
            pool = [u for i, u in enumerate(pool) if i not in combo]
            hit = True
            break
        if not hit:
            size += 1
    if len(remaining) - 1 > 0:
        found.append(remaining)
    return found


def _factor_squarefree_int(f_coeffs: list[int]) -> list[list[int]]:
    """Irreducible primitive factors (positive lc) of a primitive squarefree
    integer polynomial with positive leading coefficient."""
    n = len(f_coeffs) - 1
    if n <= 1:
        return [list(f_coeffs)]
    lead = f_coeffs[-1]
    if lead == 1:
        monic_factors = _factor_squarefree_monic_int(f_coeffs)
        return monic_factors
    # G(X) = lead^(n-1) * F(X/lead) is monic with integer coefficients.
    g_coeffs = [c * lead ** (n - 1 - i) for i, c in enumerate(f_coeffs[:-1])] + [1]
    out = []
    for g in _factor_squarefree_monic_int(g_coeffs):
        # Map back: primitive part of g(lead * X).
        back = [c * lead**i for i, c in enumerate(g)]
        out.append(_primitive(back))
    return out


def poly_factor(f: RationalPolynomial) -> list[tuple[RationalPolynomial, int]]:
    """Factor f over Q into monic irreducibles with multiplicities.

    The factors are sorted by (degree, coefficient tuple) so the output is
    reproducible; f equals its leading coefficient times the product of
    factor^multiplicity.  Degree is capped at FACTOR_DEGREE_CAP.
    """
    if f.is_zero:
        raise ZeroPolynomialError("cannot factor the zero polynomial")
    if f.degree > FACTOR_DEGREE_CAP:
        raise FactorDegreeError(
            f"DEGREE_CAP: degree {f.degree} exceeds the factorization cap {FACTOR_DEGREE_CAP}"
        )
    out: list[tuple[RationalPolynomial, int]] = []
    for part, mult in squarefree_decomposition(f):
        _, prim = part.content_and_primitive()
        for coeffs in _factor_squarefree_int(list(prim)):
            out.append((RationalPolynomial.from_int_coeffs(coeffs).monic(), mult))
    out.sort(key=lambda pair: pair[0].sort_key())
    return out


def modp_factor(coeffs: Sequence[int], p: int) -> list[tuple[tuple[int, ...], int]]:
    """Factor a monic integer polynomial mod p into monic irreducibles with
    multiplicities, sorted by (degree, coefficient tuple).

    Handles inseparable parts (f' = 0 means f = g(X)^p over F_p) so it is
    safe at ramified primes.
    """
    f = _gp_monic([c % p for c in coeffs], p)
    if not f:
        raise ZeroPolynomialError("mod-p factorization of the zero polynomial")
    result: dict[tuple[int, ...], int] = {}

    def accumulate(poly: list[int], mult: int):
        if len(poly) - 1 < 1:
            return
        df = _gp_deriv(poly, p)
        if not df:
            # poly(X) = g(X^p) = g(X)^p over F_p.
            g = [poly[p * i] for i in range((len(poly) - 1) // p + 1)]
            accumulate(_trim(g), mult * p)
            return
        remaining = list(poly)
        sq = _gp_divmod(remaining, _gp_gcd(remaining, df, p), p)[0]
        for fac in _berlekamp(_gp_monic(sq, p), p):
            e = 0
            while True:
                quot, rem = _gp_divmod(remaining, fac, p)
                if rem:
                    break
                remaining = quot
                e += 1
            if e:
                result_key = tuple(fac)
                result[result_key] = result.get(result_key, 0) + e * mult
        if len(remaining) - 1 >= 1:
            accumulate(remaining, mult)

    accumulate(f, 1)
    out = sorted(result.items(), key=lambda kv: (len(kv[0]), kv[0]))
    return [(fac, mult) for fac, mult in out]


def is_squarefree(f: RationalPolynomial) -> bool:
    from .poly import poly_gcd

    if f.is_zero:
        raise ZeroPolynomialError("squarefree test on the zero polynomial")
    if f.degree <= 1:
        return True
    return poly_gcd(f, f.derivative()).degree == 0
