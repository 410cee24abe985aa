from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from prufer.errors import FactorDegreeError, ZeroPolynomialError
from prufer.factor import is_squarefree, modp_factor, poly_factor
from prufer.poly import RationalPolynomial


def P(*coeffs):
    return RationalPolynomial(coeffs)


def test_factor_difference_of_squares():
    assert poly_factor(P(-1, 0, 1)) == [(P(-1, 1), 1), (P(1, 1), 1)]


def test_factor_x4_minus_1():
    fs = poly_factor(P(-1, 0, 0, 0, 1))
    assert fs == [(P(-1, 1), 1), (P(1, 1), 1), (P(1, 0, 1), 1)]


def test_factor_irreducible_quadratic():
    f = P(-1, -1, 1)  # X^2 - X - 1
    assert poly_factor(f) == [(f, 1)]


def test_factor_with_multiplicity():
    f = P(1, 0, 1) ** 2 * P(-3, 1)
    assert poly_factor(f) == [(P(-3, 1), 1), (P(1, 0, 1), 2)]


def test_factor_handles_leading_coefficient():
    f = 6 * P(-1, 1) * P(1, 1)
    fs = poly_factor(f)
    assert fs == [(P(-1, 1), 1), (P(1, 1), 1)]
    prod = RationalPolynomial.constant(f.leading_coefficient)
    for g, m in fs:
        prod = prod * g ** m
    assert prod == f


def test_factor_cyclotomic_nine():
    f = P(1, 0, 0, 1, 0, 0, 1)  # X^6 + X^3 + 1, irreducible
    assert poly_factor(f) == [(f, 1)]


def test_factor_needs_recombination():
    # (X^2 - 2)(X^2 - 3): splits into four linear factors mod many p,
    # the recombination step must merge them back into two quadratics
    f = P(-2, 0, 1) * P(-3, 0, 1)
    assert poly_factor(f) == [(P(-3, 0, 1), 1), (P(-2, 0, 1), 1)]


def test_factor_rational_coefficients():
    f = P(Fraction(-1, 4), 0, 1)  # (X - 1/2)(X + 1/2)
    assert poly_factor(f) == [(P(Fraction(-1, 2), 1), 1), (P(Fraction(1, 2), 1), 1)]


def test_factor_degree_cap():
    coeffs = [-2] + [0] * 32 + [1]  # X^33 - 2
    with pytest.raises(FactorDegreeError):
        poly_factor(RationalPolynomial(coeffs))


def test_factor_zero():
    with pytest.raises(ZeroPolynomialError):
        poly_factor(RationalPolynomial.zero_poly)


def test_modp_factor_square():
    # X^2 + 1 = (X + 1)^2 mod 2
    assert modp_factor((1, 0, 1), 2) == [((1, 1), 2)]


def test_modp_factor_split():
    # X^2 + 1 = (X + 2)(X + 3) mod 5
    assert modp_factor((1, 0, 1), 5) == [((2, 1), 1), ((3, 1), 1)]


def test_modp_factor_inert():
    # X^2 + 1 irreducible mod 3
    assert modp_factor((1, 0, 1), 3) == [((1, 0, 1), 1)]


def test_modp_factor_inseparable():
    assert modp_factor((0, 0, 1), 2) == [((0, 1), 2)]


def test_is_squarefree():
    assert is_squarefree(P(-1, 0, 1))
    assert not is_squarefree(P(1, -2, 1))


@st.composite
def monic_products(draw):
    pool = [P(-1, 1), P(1, 1), P(-2, 1), P(2, 1), P(1, 0, 1), P(-1, -1, 1), P(3, 0, 1)]
    picks = draw(st.lists(st.sampled_from(range(len(pool))), min_size=1, max_size=4))
    f = RationalPolynomial.one_poly
    for i in picks:
        f = f * pool[i]
    return f


@given(monic_products())
def test_factor_round_trip(f):
    prod = RationalPolynomial.constant(f.leading_coefficient)
    for g, m in poly_factor(f):
        assert g.is_monic
        assert m >= 1
        prod = prod * g ** m
    assert prod == f


@given(monic_products())
def test_factors_are_sorted_and_irreducible(f):
    fs = poly_factor(f)
    keys = [g.sort_key() for g, _ in fs]
    assert keys == sorted(keys)
    for g, _ in fs:
        # irreducible means factoring again returns the factor itself
        assert poly_factor(g) == [(g, 1)]
