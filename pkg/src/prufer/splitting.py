"""Splitting a commutative reduced order's ambient algebra into fields.

For commutative reduced B of dimension n over Q there is a primitive element
a (the minimal polynomial has degree n), and the factorization of that
minimal polynomial into distinct irreducibles g_1 ... g_t gives orthogonal
idempotents e_i and field components B_i = B e_i = Q[a] e_i.  Everything here
is deterministic: the primitive element comes from a fixed search order and
the factors are sorted canonically, so component numbering is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator

from .errors import NotApplicableError, PruferError, SearchExhaustedError
from .factor import poly_factor
from .lattice import rational_rows_lattice
from .linalg import solve_right
from .orders import (
    AlgebraElement,
    ZOrder,
    evaluate_poly,
    is_commutative,
    is_reduced,
    minimal_polynomial,
    mul,
    NOT_REDUCED,
)
from .poly import RationalPolynomial, poly_xgcd

SEARCH_CAP = 200000


def shell_vectors(dim: int, shell_max: int, cap: int = SEARCH_CAP) -> Iterator[tuple[int, ...]]:
    """Integer vectors ordered by max-norm shell, then little-endian within a
    shell with per-coordinate value order 0, 1, -1, 2, -2, ...

    The first coordinate varies fastest, so sparse vectors supported on early
    coordinates come before their mirror images.  Yields at most ``cap``
    vectors (the zero vector is skipped).
    """
    seen = 0
    for m in range(1, shell_max + 1):
        values = [0]
        for v in range(1, m + 1):
            values.extend((v, -v))
        for rev in product(values, repeat=dim):
            vec = rev[::-1]
            if max(abs(c) for c in vec) != m:
                continue
            yield vec
            seen += 1
            if seen >= cap:
                return


def find_primitive_element(order: ZOrder) -> AlgebraElement:
    """Deterministic search for a in A with deg(minimal polynomial) = dim.

    Requires the ambient algebra to be commutative and reduced (etale), where
    primitive elements exist and small integer combinations of the basis hit
    one quickly.
    """
    commutative, _ = is_commutative(order)
    if not commutative:
        raise NotApplicableError("NOT_COMMUTATIVE: primitive element search needs a commutative algebra")
    n = order.dim
    if n == 1:
        return order.identity()
    tried = 0
    for vec in shell_vectors(n, shell_max=max(4, n)):
        candidate = AlgebraElement(tuple(Fraction(c) for c in vec))
        mu = minimal_polynomial(order, candidate)
        tried += 1
        if mu.degree == n:
            return candidate
        if tried >= SEARCH_CAP:
            break
    raise SearchExhaustedError("SEARCH_EXHAUSTED: no primitive element found within the search budget")


@dataclass(frozen=True)
class Decomposition:
    """A splitting of the ambient algebra as a product of fields.

    component_bases[i] lists coordinates (in the original basis) of the
    Q-basis e_i, a e_i, ..., a^(d_i - 1) e_i of the i-th field component.
    """

    primitive: AlgebraElement
    min_poly: RationalPolynomial
    factors: tuple[RationalPolynomial, ...]
    idempotents: tuple[AlgebraElement, ...]
    component_bases: tuple[tuple[AlgebraElement, ...], ...]

    @property
    def count(self) -> int:
        return len(self.factors)


def decompose(order: ZOrder) -> Decomposition:
    """Split B into fields via a primitive element.

    Preconditions: B commutative and reduced; violations raise
    NotApplicableError.  The idempotent identities are verified before
    returning, so downstream code can rely on them.
    """
    commutative, _ = is_commutative(order)
    if not commutative:
        raise NotApplicableError("NOT_COMMUTATIVE: decompose needs a commutative algebra")
    reduced = is_reduced(order)
    if reduced.status == NOT_REDUCED:
        raise NotApplicableError("NOT_REDUCED: decompose needs a reduced algebra")
    a = find_primitive_element(order)
    mu = minimal_polynomial(order, a)
    factor_pairs = poly_factor(mu)
    if any(mult != 1 for _, mult in factor_pairs):
        raise PruferError("minimal polynomial of a primitive element is not squarefree in a reduced algebra")
    factors = tuple(g for g, _ in factor_pairs)
    idempotents = []
    for g in factors:
        cofactor = mu // g
        gcd_poly, s, _ = poly_xgcd(g, cofactor)
        if gcd_poly.degree != 0:
            raise PruferError("minimal polynomial factors are not coprime")
        # s*g + t*cofactor = 1, so (1 - s*g) = t*cofactor is 1 mod g and
        # 0 mod every other factor; evaluate it at a.
        nu = RationalPolynomial.one_poly - s * g
        idempotents.append(evaluate_poly(order, nu, a))
    total = order.zero()
    for e in idempotents:
        total = total + e
    if total.coords != order.identity().coords:
        raise PruferError("idempotents do not sum to the identity")
    for i, ei in enumerate(idempotents):
        for j, ej in enumerate(idempotents):
            prod = mul(order, ei, ej)
            expected = ei.coords if i == j else order.zero().coords
            if prod.coords != expected:
                raise PruferError("idempotents are not orthogonal")
    bases = []
    for g, e in zip(factors, idempotents):
        vectors = [e]
        current = e
        for _ in range(1, g.degree):
            current = mul(order, current, a)
            vectors.append(current)
        bases.append(tuple(vectors))
    return Decomposition(
        primitive=a,
        min_poly=mu,
        factors=factors,
        idempotents=tuple(idempotents),
        component_bases=tuple(bases),
    )


def idempotents_in_order(
    order: ZOrder, dec: Decomposition
) -> tuple[bool, AlgebraElement | None]:
    """Do all component idempotents have integer coordinates (lie in A)?

    Returns (True, None) or (False, first escaping idempotent).
    """
    for e in dec.idempotents:
        if not e.is_integral_vector:
            return False, e
    return True, None


@dataclass(frozen=True)
class ComponentOrder:
    """The image lattice A e_i as a standalone order plus its embedding.

    ``basis_in_ambient`` rows are coordinates in the original order's basis;
    row r is the image of the component order's basis vector r.
    """

    order: ZOrder
    basis_in_ambient: tuple[tuple[Fraction, ...], ...]

    def to_ambient(self, coords) -> AlgebraElement:
        """Map component coordinates (rational) to an ambient element."""
        out = [Fraction(0)] * len(self.basis_in_ambient[0])
        for c, row in zip(coords, self.basis_in_ambient):
            c = Fraction(c)
            if c:
                out = [acc + c * x for acc, x in zip(out, row)]
        return AlgebraElement(tuple(out))


def component_order(order: ZOrder, dec: Decomposition, index: int) -> ComponentOrder:
    """The projection A e_i of the order into component i, as a ZOrder.

    The projection is a finitely generated ring with identity e_i; its basis
    is the Hermite-form basis of the lattice spanned by b_j e_i.
    """
    e = dec.idempotents[index]
    generators = [mul(order, order.basis_element(j), e).coords for j in range(order.dim)]
    lat, den = rational_rows_lattice(generators)
    basis_rows = tuple(tuple(Fraction(c, den) for c in row) for row in lat.basis)
    m = len(basis_rows)
    if m != dec.factors[index].degree:
        raise PruferError("component lattice rank does not match the factor degree")

    cols = [[basis_rows[r][i] for r in range(m)] for i in range(order.dim)]

    def in_component_coords(vec: AlgebraElement) -> tuple[int, ...]:
        sol = solve_right(cols, list(vec.coords))
        if sol is None:
            raise PruferError("element does not lie in the component span")
        out = []
        for c in sol:
            if c.denominator != 1:
                raise PruferError("component lattice is not multiplicatively closed")
            out.append(int(c))
        return tuple(out)

    table = []
    for r in range(m):
        row = []
        er = AlgebraElement(basis_rows[r])
        for s in range(m):
            es = AlgebraElement(basis_rows[s])
            row.append(in_component_coords(mul(order, er, es)))
        table.append(tuple(row))
    one = in_component_coords(e)
    names = tuple(f"c{index}.{r}" for r in range(m))
    comp = ZOrder(dim=m, table=tuple(table), one=one, basis_names=names)
    return ComponentOrder(order=comp, basis_in_ambient=basis_rows)
