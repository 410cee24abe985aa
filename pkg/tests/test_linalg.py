from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from prufer.linalg import (
    bareiss_det,
    charpoly,
    fraction_det,
    identity_matrix,
    mat_mul,
    mat_vec,
    modp_left_kernel,
    rank,
    right_kernel,
    rref,
    solve_right,
    xgcd,
)

small_ints = st.integers(min_value=-9, max_value=9)


def square_matrix(n):
    return st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)


def test_rref_invertible():
    rows, pivots = rref([[1, 2], [3, 4]])
    assert pivots == [0, 1]
    assert rows == [(1, 0), (0, 1)]


def test_rref_singular():
    rows, pivots = rref([[1, 2], [2, 4]])
    assert pivots == [0]
    assert rows[0] == (1, 2)


def test_rank():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0], [0, 1]]) == 2
    assert rank([[0, 0], [0, 0]]) == 0


def test_solve_right():
    x = solve_right([[2, 0], [0, 3]], (4, 9))
    assert x == (Fraction(2), Fraction(3))


def test_solve_right_inconsistent():
    assert solve_right([[1, 1], [1, 1]], (0, 1)) is None


def test_right_kernel_dimension():
    ker = right_kernel([[1, 1, 1]])
    assert len(ker) == 2
    for v in ker:
        assert sum(v) == 0


def test_determinants_agree():
    m = [[2, 7, 1], [0, 3, -4], [5, 1, 1]]
    assert bareiss_det(m) == fraction_det(m)
    assert bareiss_det(m) == 2 * (3 * 1 - (-4) * 1) - 7 * (0 - (-20)) + 1 * (0 - 15)


def test_det_identity():
    assert bareiss_det(identity_matrix(4)) == 1


def test_charpoly_companion():
    # companion matrix of X^2 - 2X - 4 acting by left multiplication
    assert charpoly([[0, 4], [1, 2]]) == [Fraction(-4), Fraction(-2), Fraction(1)]


def test_charpoly_identity():
    # (X - 1)^3
    assert charpoly(identity_matrix(3)) == [Fraction(-1), Fraction(3), Fraction(-3), Fraction(1)]


def test_mat_helpers():
    a = [[1, 2], [3, 4]]
    assert mat_mul(a, identity_matrix(2)) == [[1, 2], [3, 4]]
    assert tuple(mat_vec(a, (1, 1))) == (3, 7)


def test_modp_left_kernel():
    ker = modp_left_kernel([[2, 0], [0, 1]], 2)
    assert ker == [[1, 0]]


@given(st.integers(min_value=-500, max_value=500), st.integers(min_value=-500, max_value=500))
def test_xgcd_bezout(a, b):
    g, s, t = xgcd(a, b)
    assert g == a * s + b * t
    assert g >= 0
    if a or b:
        assert a % g == 0 and b % g == 0


@given(square_matrix(3))
def test_det_routes_agree(m):
    assert bareiss_det(m) == fraction_det(m)


@given(square_matrix(3))
def test_charpoly_constant_term_is_det(m):
    # det(X*I - M) at X = 0 is (-1)^3 det(M)
    cp = charpoly(m)
    assert cp[0] == -Fraction(bareiss_det(m))


@given(square_matrix(2), st.lists(small_ints, min_size=2, max_size=2))
def test_solve_right_solves(m, rhs):
    x = solve_right(m, rhs)
    if x is not None:
        assert tuple(mat_vec(m, x)) == tuple(Fraction(c) for c in rhs)
