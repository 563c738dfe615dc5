from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dresschain.exact import (
    Polynomial,
    RationalFunction,
    ZeroPolynomial,
    det_poly_matrix,
    det_poly_matrix_cofactor,
    eval_at,
    log_derivative_ratio,
    poly_gcd,
    ratfunc_is_constant,
)

Z = Polynomial.x()
ONE = Polynomial.one()


def P(*coeffs):
    return Polynomial(coeffs)


# -- polynomial basics --------------------------------------------------------

def test_normalization_strips_trailing_zeros():
    assert Polynomial((1, 2, 0, 0)).coeffs == (F(1), F(2))
    assert Polynomial((0, 0)).is_zero
    assert Polynomial(()).degree == -1


def test_arithmetic():
    p = P(1, 2) * P(3, 0, 1)  # (1+2z)(3+z^2)
    assert p == P(3, 6, 1, 2)
    assert P(1, 1) ** 3 == P(1, 3, 3, 1)
    q, r = divmod(P(-1, 0, 0, 1), P(-1, 1))
    assert q == P(1, 1, 1) and r.is_zero


def test_eval_examples():
    assert eval_at(P(-2, 0, 4), 1) == 2  # 4z^2 - 2 at 1
    assert eval_at(Polynomial.zero(), F(7, 3)) == 0
    assert eval_at(P(0, 0, 0, 1), F(-2, 3)) == F(-8, 27)


def test_compose_and_decompress():
    p = P(1, 0, 2).compose(Z * Z)  # 1 + 2 z^4
    assert p == P(1, 0, 0, 0, 2)
    assert p.decompress_even() == P(1, 0, 2)
    with pytest.raises(ValueError):
        P(0, 1).decompress_even()


def test_split_lowest():
    v, q = P(0, 0, 3, 1).split_lowest()
    assert v == 2 and q == P(3, 1)
    assert Polynomial.zero().split_lowest() == (0, Polynomial.zero())


def test_string_round_trip():
    p = P(F(-2), 0, F(4))
    assert p.to_strings() == ["-2/1", "0/1", "4/1"]
    assert Polynomial.from_strings(p.to_strings()) == p


# -- determinants -------------------------------------------------------------

def test_det_identity_case():
    assert det_poly_matrix([[ONE]]) == ONE


def test_det_2x2_hand_expansion():
    m = [[2 * Z, 4 * Z ** 2 - 2], [ONE, 4 * Z]]
    assert det_poly_matrix(m) == 4 * Z ** 2 + 2


def test_det_upper_triangular():
    m = [
        [ONE, Z, Z ** 2],
        [Polynomial.zero(), ONE, 2 * Z],
        [Polynomial.zero(), Polynomial.zero(), P(2)],
    ]
    assert det_poly_matrix(m) == P(2)


def test_det_rejects_empty_and_ragged():
    with pytest.raises(ValueError):
        det_poly_matrix([])
    with pytest.raises(ValueError):
        det_poly_matrix([[ONE, Z]])


def test_det_zero_column_fallback():
    m = [[Polynomial.zero(), Z], [Polynomial.zero(), ONE]]
    assert det_poly_matrix(m).is_zero


def test_det_needs_row_swap():
    m = [[Polynomial.zero(), ONE], [Z, Polynomial.zero()]]
    assert det_poly_matrix(m) == -(Z)


small_polys = st.lists(
    st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=0, max_size=5
).map(Polynomial)


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=1, max_value=5).flatmap(
        lambda n: st.lists(
            st.lists(small_polys, min_size=n, max_size=n), min_size=n, max_size=n
        )
    )
)
def test_det_matches_cofactor_oracle(matrix):
    assert det_poly_matrix(matrix) == det_poly_matrix_cofactor(matrix)


# -- rational functions -------------------------------------------------------

def test_normal_form_monic_reduced():
    r = RationalFunction(2 * Z + 2, 2 * Z ** 2 + 2 * Z)
    assert r.num == ONE and r.den == Z
    assert RationalFunction(Polynomial.zero(), Z).den == ONE


def test_log_derivative_examples():
    assert log_derivative_ratio(Z, ONE) == RationalFunction(ONE, Z)
    assert log_derivative_ratio(Z ** 2 + 1, Z ** 2 + 1).is_zero
    assert log_derivative_ratio(Z ** 2 + 1, Z) == RationalFunction(Z ** 2 - 1, Z ** 3 + Z)
    with pytest.raises(ZeroPolynomial):
        log_derivative_ratio(Polynomial.zero(), Z)


def test_ratfunc_is_constant():
    assert ratfunc_is_constant(RationalFunction(P(3), P(2))) == F(3, 2)
    assert ratfunc_is_constant(RationalFunction(Z)) is None
    assert ratfunc_is_constant(RationalFunction(2 * Z + 2, Z + 1)) == 2


nonzero_polys = small_polys.filter(lambda p: not p.is_zero)


@settings(max_examples=60, deadline=None)
@given(nonzero_polys, nonzero_polys)
def test_log_derivative_antisymmetry(p, q):
    assert (log_derivative_ratio(p, q) + log_derivative_ratio(q, p)).is_zero


@settings(max_examples=60, deadline=None)
@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_log_derivative_gauge_cancellation(p, q, r):
    assert log_derivative_ratio(p * r, q * r) == log_derivative_ratio(p, q)


@settings(max_examples=40, deadline=None)
@given(nonzero_polys, nonzero_polys)
def test_field_inverse(a, b):
    r = RationalFunction(a, b)
    assert r * (RationalFunction(b, a)) == RationalFunction(ONE)


@settings(max_examples=40, deadline=None)
@given(small_polys, small_polys, small_polys, nonzero_polys)
def test_addition_associative_commutative(a, b, c, d):
    x = RationalFunction(a, d)
    y = RationalFunction(b, d)
    z = RationalFunction(c, d)
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x


@settings(max_examples=40, deadline=None)
@given(nonzero_polys, nonzero_polys)
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    assert (a % g).is_zero and (b % g).is_zero
    assert g.leading == 1
