from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trischur.exactmath import (
    LaurentPolynomial,
    NotDivisibleError,
    TruncatedSeries,
    divide_by_binomial,
    laurent_add,
    laurent_exact_divide,
    laurent_mul,
    rr_eval,
    rr_symbolic,
    todd_factor_series,
)

L = LaurentPolynomial


def q():
    return L.variable(1, 0)


# -- Laurent arithmetic --------------------------------------------------------


def test_mul_of_inverse_pair():
    a = 1 - L.monomial((-1, 1))
    b = 1 - L.monomial((1, -1))
    expected = L(2, {(0, 0): 2, (-1, 1): -1, (1, -1): -1})
    assert laurent_mul(a, b) == expected


def test_add_zero_and_difference_of_squares():
    p = L(2, {(1, 0): 3, (0, -2): Fraction(1, 2)})
    assert laurent_add(p, L.zero(2)) == p
    assert (1 - q()) * (1 + q()) == 1 - q() ** 2


def test_variable_count_mismatch():
    with pytest.raises(ValueError):
        laurent_add(L.zero(1), L.zero(2))
    with pytest.raises(ValueError):
        laurent_mul(L.constant(1), L.constant(2))


def test_zero_terms_dropped():
    p = L(1, {(1,): 1}) - L(1, {(1,): 1})
    assert p.is_zero() and len(p) == 0


def test_exact_divide_examples():
    assert laurent_exact_divide(1 - q() ** 2, 1 - q()) == 1 + q()
    e2 = L(3, {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1})
    assert laurent_exact_divide(e2, L.constant(3)) == e2
    p = L(2, {(2, -1): 3, (0, 0): -1, (-1, 4): Fraction(2, 7)})
    assert laurent_exact_divide(p, p) == L.constant(2)


def test_exact_divide_rejects():
    with pytest.raises(NotDivisibleError):
        laurent_exact_divide(1 + q(), 1 - q())
    with pytest.raises(ZeroDivisionError):
        laurent_exact_divide(q(), L.zero(1))


def test_divide_by_binomial_matches_general_division():
    p = L(2, {(0, 0): 1, (2, -1): -3, (1, 1): 2})
    v = (1, -1)
    num = p * (1 - L.monomial(v))
    assert divide_by_binomial(num, v) == p
    assert laurent_exact_divide(num, 1 - L.monomial(v)) == p
    with pytest.raises(NotDivisibleError):
        divide_by_binomial(p, v)


def test_negative_power_only_for_monomials():
    assert L.monomial((2, -1)) ** -2 == L.monomial((-4, 2))
    with pytest.raises(ValueError):
        (1 + q()) ** -1


def test_evaluate_and_specialize():
    p = L(2, {(1, -1): 2, (0, 2): 1})
    assert p.evaluate([Fraction(1, 2), 3]) == Fraction(2, 6) + 9
    assert p.specialize([1, 2]) == 2 * q() ** -1 + q() ** 4


small_coeff = st.integers(-3, 3).filter(bool)
exponent2 = st.tuples(st.integers(-2, 2), st.integers(-2, 2))
laurent2 = st.dictionaries(exponent2, small_coeff, min_size=1, max_size=4).map(lambda d: L(2, d))


@settings(max_examples=60, deadline=None)
@given(laurent2, laurent2)
def test_divide_inverts_multiply(a, b):
    assert laurent_exact_divide(a * b, b) == a


@settings(max_examples=60, deadline=None)
@given(laurent2, exponent2.filter(any))
def test_binomial_division_inverts_multiply(a, v):
    assert divide_by_binomial(a * (1 - L.monomial(v)), v) == a


@settings(max_examples=60, deadline=None)
@given(laurent2, laurent2, st.tuples(st.integers(1, 5), st.integers(1, 5)))
def test_evaluation_is_a_ring_map(a, b, pt):
    assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)
    assert (a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)


# -- series and RR -------------------------------------------------------------


def bernoulli_plus(m):
    """B_0..B_m with B_1 = +1/2, from sum_{j<=k} C(k+1, j) B_j = 0."""
    b = [Fraction(1)]
    for k in range(1, m + 1):
        b.append(-sum(comb(k + 1, j) * b[j] for j in range(k)) / (k + 1))
    if m >= 1:
        b[1] = -b[1]
    return b


def test_todd_series_examples():
    assert list(todd_factor_series(1, 4).coeffs) == [1, Fraction(1, 2), Fraction(1, 12), 0, Fraction(-1, 720)]
    assert list(todd_factor_series(-1, 2).coeffs) == [1, Fraction(-1, 2), Fraction(1, 12)]
    assert list(todd_factor_series(2, 2).coeffs) == [1, 1, Fraction(1, 3)]


@pytest.mark.parametrize("r", [-5, -2, -1, 1, 3, 7])
def test_todd_series_matches_bernoulli_numbers(r):
    bern = bernoulli_plus(12)
    series = todd_factor_series(r, 12)
    assert list(series.coeffs) == [bern[k] * Fraction(r) ** k / factorial(k) for k in range(13)]
    assert all(series[k] == 0 for k in range(3, 13, 2))


def test_todd_series_rejects_zero():
    with pytest.raises(ValueError):
        todd_factor_series(0, 3)


def naive_rr(b, r):
    """RR_M by multiplying truncated series factor by factor."""
    m = len(r)
    acc = TruncatedSeries.exp(b, m)
    for x in r:
        acc = acc * todd_factor_series(x, m)
    return acc[m]


def test_rr_eval_examples():
    assert rr_eval(1, [1]) == Fraction(3, 2)
    assert rr_eval(0, [1, 1]) == Fraction(5, 12)
    for r in (-3, 2, 7):
        assert rr_eval(0, [r]) == Fraction(r, 2)
    assert rr_eval(5, []) == 1
    with pytest.raises(ValueError):
        rr_eval(1, [1, 0])


@settings(max_examples=80, deadline=None)
@given(st.integers(-10, 10), st.lists(st.integers(-6, 6).filter(bool), max_size=12))
def test_rr_eval_matches_series_product(b, r):
    assert rr_eval(b, r) == naive_rr(b, r)


def test_series_log_exp_round_trip():
    s = TruncatedSeries((1, Fraction(1, 3), -2, 5, Fraction(1, 7)))
    assert s.log().exp_of() == s
    assert s * s.inverse() == TruncatedSeries((1, 0, 0, 0, 0))


def test_rr_symbolic_small():
    assert rr_symbolic(0) == L.constant(1)
    b, r1 = L.variable(2, 0), L.variable(2, 1)
    assert rr_symbolic(1) == b + Fraction(1, 2) * r1


def test_rr_symbolic_six_has_567_terms():
    p = rr_symbolic(6)
    assert len(p) == 567
    assert p.total_degrees() == {6}


@pytest.mark.parametrize("point", [(2, 1, -1, 3, 2, -2), (0, 1, 1, 1, 1, 1), (-4, 5, -1, 2, 7, 3)])
def test_rr_symbolic_agrees_with_rr_eval(point):
    m = len(point) - 1
    assert rr_symbolic(m).evaluate(point) == rr_eval(point[0], point[1:])


def test_rr_symbolic_is_symmetric_in_r():
    p = rr_symbolic(4)
    assert p.permute([0, 2, 1, 4, 3]) == p
