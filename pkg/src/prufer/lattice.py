"""Integer lattices in Hermite normal form.

A lattice is stored as a tuple of integer basis rows in row-style Hermite
normal form: pivots positive, moving strictly right as you go down, and every
entry above a pivot reduced into [0, pivot).  That form is unique for a given
lattice, so two lattices are equal iff their stored bases are equal, and
membership testing is back-substitution along the pivots.

All inputs are sequences of equal-length rows; rationals are accepted where
documented and rejected (or reported as non-members) where they make no
sense.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DimensionMismatchError
from .linalg import right_kernel, xgcd


def _hnf_in_place(rows: list[list[int]], width: int, extra: int = 0) -> int:
    """Reduce ``rows`` to Hermite normal form, returning the rank.

    Only the first ``width`` columns drive pivot selection; ``extra`` trailing
    columns (used to carry a transform matrix) just come along for the ride.
    Rows beyond the returned rank are zero in their first ``width`` columns.
    """
    m = len(rows)
    r = 0
    for col in range(width):
        piv = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, m):
            b = rows[i][col]
            if b == 0:
                continue
            a = rows[r][col]
            g, x, y = xgcd(a, b)
            aa, bb = a // g, b // g
            rr, ri = rows[r], rows[i]
            rows[r] = [x * p + y * q for p, q in zip(rr, ri)]
            rows[i] = [aa * q - bb * p for p, q in zip(rr, ri)]
        if rows[r][col] < 0:
            rows[r] = [-x for x in rows[r]]
        piv_val = rows[r][col]
        for j in range(r):
            q = rows[j][col] // piv_val
            if q:
                rows[j] = [p - q * s for p, s in zip(rows[j], rows[r])]
        r += 1
        if r == m:
            break
    return r


@dataclass(frozen=True)
class IntegerLattice:
    """A sublattice of Z^ambient_dim with basis rows in Hermite normal form."""

    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ambient_dim: int | None = None) -> "IntegerLattice":
        rows = [list(map(int, row)) for row in rows]
        if ambient_dim is None:
            if not rows:
                raise DimensionMismatchError("ambient dimension needed for an empty generating set")
            ambient_dim = len(rows[0])
        if any(len(row) != ambient_dim for row in rows):
            raise DimensionMismatchError("rows of mixed length")
        r = _hnf_in_place(rows, ambient_dim)
        return cls(ambient_dim, tuple(tuple(row) for row in rows[:r]))

    @classmethod
    def standard(cls, n: int) -> "IntegerLattice":
        return cls(n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(row) if x) for row in self.basis]

    def __contains__(self, v) -> bool:
        return lattice_member(self, v)

    def determinant(self) -> int:
        """Product of the pivots; the index [Z^n : L] when L has full rank."""
        if self.rank != self.ambient_dim:
            raise DimensionMismatchError("determinant of a non-full-rank lattice")
        det = 1
        for row, p in zip(self.basis, self.pivots()):
            det *= row[p]
        return det

    def scaled(self, k: int) -> "IntegerLattice":
        if k == 0:
            return IntegerLattice(self.ambient_dim, ())
        k = abs(k)
        return IntegerLattice(self.ambient_dim, tuple(tuple(k * x for x in row) for row in self.basis))

    def coordinates(self, v) -> tuple[int, ...] | None:
        """Integer coordinates of v in the HNF basis, or None if v is outside."""
        vec = [Fraction(x) for x in v]
        if len(vec) != self.ambient_dim:
            raise DimensionMismatchError("vector length does not match ambient dimension")
        coords = []
        for row, p in zip(self.basis, self.pivots()):
            c = vec[p] / row[p]
            if c.denominator != 1:
                return None
            c = int(c)
            coords.append(c)
            if c:
                vec = [x - c * y for x, y in zip(vec, row)]
        if any(x != 0 for x in vec):
            return None
        return tuple(coords)


def hnf_reduce(rows: Sequence[Sequence[int]], ambient_dim: int | None = None) -> IntegerLattice:
    """Hermite normal form of the lattice generated by ``rows``."""
    return IntegerLattice.from_rows(rows, ambient_dim)


def lattice_member(lattice: IntegerLattice, v) -> bool:
    """Is v in the lattice?  Rational entries are fine; non-integer combos fail."""
    return lattice.coordinates(v) is not None


def hnf_with_transform(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Return (H, U, K): U is unimodular with U*A = [H; 0], K the kernel rows.

    H is the HNF of the input (no zero rows), U tracks the row operations, and
    K consists of the U-rows matching zero H-rows, i.e. an integer basis of
    {c : c*A = 0}.  K is saturated because U is unimodular.
    """
    m = len(rows)
    if m == 0:
        return [], [], []
    n = len(rows[0])
    work = [list(map(int, row)) + [1 if i == j else 0 for j in range(m)] for i, row in enumerate(rows)]
    r = _hnf_in_place(work, n, extra=m)
    h = [row[:n] for row in work[:r]]
    u = [row[n:] for row in work]
    k = [row[n:] for row in work[r:]]
    return h, u, k


def integer_left_kernel(rows: Sequence[Sequence]) -> list[list[int]]:
    """HNF basis of {c in Z^m : c * M = 0} for a rational matrix M.

    Column-scaling M to integers does not change the left kernel, so rational
    entries are cleared first.
    """
    m = len(rows)
    if m == 0:
        return []
    mat = [[Fraction(x) for x in row] for row in rows]
    n = len(mat[0])
    cols = list(zip(*mat))
    scaled_cols = []
    for col in cols:
        d = lcm(*(x.denominator for x in col)) if col else 1
        scaled_cols.append([int(x * d) for x in col])
    int_rows = [list(r) for r in zip(*scaled_cols)] if scaled_cols else [[] for _ in range(m)]
    _, _, kernel = hnf_with_transform(int_rows)
    if not kernel:
        return []
    k = [list(row) for row in kernel]
    rank = _hnf_in_place(k, m)
    return k[:rank]


def lattice_intersect(lattice: IntegerLattice, subspace_rows: Sequence[Sequence]) -> IntegerLattice:
    """Intersection of an integer lattice with a rational subspace.

    ``subspace_rows`` span the subspace over Q.  The result is the set of
    lattice vectors lying in that span; it is automatically saturated in the
    input lattice (if k*v lands in the span, so does v).
    """
    span = [[Fraction(x) for x in row] for row in subspace_rows]
    if span and any(len(row) != lattice.ambient_dim for row in span):
        raise DimensionMismatchError("subspace rows do not match ambient dimension")
    if lattice.rank == 0:
        return lattice
    relations = right_kernel(span) if span else right_kernel([[Fraction(0)] * lattice.ambient_dim])
    if not span:
        # The zero subspace: only the zero vector survives.
        return IntegerLattice(lattice.ambient_dim, ())
    if not relations:
        # The subspace is everything.
        return lattice
    constraint = [[sum(Fraction(b) * k_j for b, k_j in zip(row, kvec)) for kvec in relations] for row in lattice.basis]
    kernel = integer_left_kernel(constraint)
    new_rows = []
    for c in kernel:
        new_rows.append([sum(ci * bij for ci, bij in zip(c, col)) for col in zip(*lattice.basis)])
    return IntegerLattice.from_rows(new_rows, lattice.ambient_dim)


def rational_rows_lattice(rows: Sequence[Sequence]) -> tuple[IntegerLattice, int]:
    """Clear denominators: returns (L, d) with the span of ``rows`` equal to L/d."""
    mat = [[Fraction(x) for x in row] for row in rows]
    d = 1
    for row in mat:
        for x in row:
            d = lcm(d, x.denominator)
    scaled = [[int(x * d) for x in row] for row in mat]
    if not scaled:
        raise DimensionMismatchError("empty generating set")
    return IntegerLattice.from_rows(scaled), d


def lattice_sum(a: IntegerLattice, b: IntegerLattice) -> IntegerLattice:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError("ambient dimensions differ")
    return IntegerLattice.from_rows(list(a.basis) + list(b.basis), a.ambient_dim)


def residue_vectors(diag: Sequence[int]) -> Iterable[tuple[int, ...]]:
    """All vectors in prod([0, d_i)); the complete residue system for a
    full-rank lattice with HNF pivot entries ``diag``."""
    import itertools

    return itertools.product(*(range(d) for d in diag))


def index_in(sub: IntegerLattice, sup: IntegerLattice) -> int:
    """The index [sup : sub] for full-rank sub <= sup of the same rank."""
    if sub.ambient_dim != sup.ambient_dim or sub.rank != sup.rank:
        raise DimensionMismatchError("index needs equal rank lattices")
    sup_pivots = 1
    sub_pivots = 1
    for row, p in zip(sup.basis, sup.pivots()):
        sup_pivots *= row[p]
    for row, p in zip(sub.basis, sub.pivots()):
        sub_pivots *= row[p]
    if sub_pivots % sup_pivots:
        raise DimensionMismatchError("lattices are not nested")
    return sub_pivots // sup_pivots
