import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from conftest import P, lambda_polys, rationals
from deghyp.hyperbolic import cosh_series, sinh_series
from deghyp.ring import LAMBDA, LambdaPoly
from deghyp.series import (LAMBDA_POLY, RATIONAL, RingMismatch, Series, ps_add,
                           ps_coeff_egf, ps_div, ps_eq, ps_mul, ps_scale_var,
                           ps_shift_down, ps_shift_up, render_series, series_to_json)
from deghyp.special import degenerate_bernoulli, degenerate_exp_series

K = 6


def rat(*cs):
    return Series(cs, RATIONAL)


def geometric(k):
    return Series([1] * (k + 1))


def test_add():
    assert ps_add(rat(1, 1), rat(1, -1)) == rat(2, 0)
    s = rat(1, F(1, 2), 3)
    assert ps_add(s, Series.zero(2)) == s


def test_add_truncates_to_min_order():
    assert ps_add(rat(1, 2, 3), rat(1, 1)).order == 1


def test_cosh_plus_sinh_is_degenerate_exp():
    x = F(1, 2)
    lhs = ps_add(cosh_series(x, K).series, sinh_series(x, K).series)
    assert lhs == degenerate_exp_series(x, K)


def test_mul():
    assert ps_mul(rat(1, 1, 0), rat(1, -1, 0)) == rat(1, 0, -1)
    assert ps_mul(geometric(5), Series([1, -1] + [0] * 4)) == Series.constant(1, 5)


def test_degenerate_exp_multiplicative():
    lhs = ps_mul(degenerate_exp_series(1, 4), degenerate_exp_series(1, 4))
    assert lhs == degenerate_exp_series(2, 4)


def test_div():
    assert ps_div(Series.constant(1, 4), rat(1, -1, 0, 0, 0)) == geometric(4)


def test_div_cauchy_series():
    # log(1+t)/t has coefficients (-1)^k/(k+1)
    log_over_t = Series([F((-1) ** k, k + 1) for k in range(5)])
    q = ps_div(Series.constant(1, 4), log_over_t)
    assert q.coeffs == (1, F(1, 2), F(-1, 12), F(1, 24), F(-19, 720))


def test_div_non_unit_raises():
    with pytest.raises(ZeroDivisionError):
        ps_div(rat(1, 1), rat(0, 1))
    with pytest.raises(ZeroDivisionError):
        ps_div(Series([1, 1], LAMBDA_POLY), Series([LAMBDA, 1], LAMBDA_POLY))


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        ps_add(rat(1), Series([1], LAMBDA_POLY))


def test_scale_var():
    assert ps_scale_var(rat(1, 1, 1), 0) == rat(1, 0, 0)
    assert ps_scale_var(rat(0, 1), LAMBDA) == Series([0, LAMBDA], LAMBDA_POLY)
    cauchy_egf = Series.from_egf([1, F(1, 2), F(-1, 6)])
    assert ps_scale_var(cauchy_egf, LAMBDA).coeffs == (1, P("1/2*l"), P("-1/12*l^2"))


def test_eq_reports_first_mismatch():
    assert ps_eq(rat(1, 2), rat(1, 2))
    assert ps_eq(rat(1, 1), rat(1, 1, 1), upto=1)
    m = ps_eq(rat(1, 1), rat(1, -1))
    assert not m and m.index == 1 and (m.lhs, m.rhs) == (1, -1)
    with pytest.raises(ValueError):
        ps_eq(rat(1, 1), rat(1, 1, 1), upto=2)


def test_coeff_egf():
    s = rat(3, 1, 2)
    assert ps_coeff_egf(s, 0) == 3
    assert ps_coeff_egf(geometric(3), 3) == 6
    assert ps_coeff_egf(Series.from_egf(degenerate_bernoulli(4).values, LAMBDA_POLY), 2) \
        == P("1/6 + 1/2*l")
    with pytest.raises(IndexError):
        ps_coeff_egf(s, 3)


def test_shifts():
    s = rat(0, 0, 1, 2)
    assert ps_shift_down(s, 2) == rat(1, 2)
    assert ps_shift_up(rat(1, 2, 3), 1) == rat(0, 1, 2)
    with pytest.raises(ValueError):
        ps_shift_down(rat(1, 2), 1)


def test_rendering():
    s = Series([1, 0, P("1/2 - l"), -LAMBDA], LAMBDA_POLY)
    assert render_series(s) == "1 + (1/2 - l)*a^2 - l*a^3"
    assert series_to_json(s) == ["1", "0", "1/2 - l", "-l"]
    assert render_series(Series.zero(2)) == "0"


series_rat = st.lists(rationals, min_size=9, max_size=9).map(lambda cs: Series(cs))
series_lp = st.lists(lambda_polys, min_size=5, max_size=5).map(
    lambda cs: Series(cs, LAMBDA_POLY))
unit_series = st.tuples(rationals.filter(bool), st.lists(rationals, min_size=8, max_size=8)) \
    .map(lambda t: Series([t[0], *t[1]]))


@settings(max_examples=50)
@given(series_rat, series_rat, series_rat)
def test_series_ring_laws(a, b, c):
    assert ps_mul(ps_mul(a, b), c) == ps_mul(a, ps_mul(b, c))
    assert ps_mul(a, b) == ps_mul(b, a)
    assert ps_mul(a, ps_add(b, c)) == ps_add(ps_mul(a, b), ps_mul(a, c))


@settings(max_examples=30)
@given(series_lp, series_lp)
def test_lambda_series_commutative(a, b):
    assert ps_mul(a, b) == ps_mul(b, a)


@settings(max_examples=50)
@given(series_rat, unit_series)
def test_div_round_trip(n, d):
    assert ps_mul(ps_div(n, d), d) == n


@settings(max_examples=50)
@given(series_rat, series_rat, rationals)
def test_scale_properties(a, b, c):
    assert ps_scale_var(a, 1) == a
    assert ps_scale_var(ps_mul(a, b), c) == ps_mul(ps_scale_var(a, c), ps_scale_var(b, c))


@given(series_rat)
def test_egf_ogf_consistency(s):
    for n in range(s.order + 1):
        assert ps_coeff_egf(s, n) / math.factorial(n) == s[n]
