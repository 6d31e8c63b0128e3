import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from conftest import P, rationals
from deghyp.hyperbolic import (HALF, coth_half_scaled_series, cosh_series, sinh_series,
                               tanh_half_series, verify_addition, verify_double_angle)
from deghyp.ring import LambdaPoly, lp_eval, lp_reflect
from deghyp.series import LAMBDA_POLY, Series, ps_eq, ps_mul, ps_shift_up
from deghyp.special import degenerate_exp_series

# EGF coefficients of sinh/cosh at x = 1/2 (and a*cosh/sinh) from sympy Taylor expansion
TANH_FROZEN = ["0", "1/2", "-1/2*l", "-1/4 + l^2", "3/2*l - 3*l^3",
               "1/2 - 35/4*l^2 + 12*l^4", "-15/2*l + 225/4*l^3 - 60*l^5"]
ACOTH_FROZEN = ["2", "l", "1/3 - 1/3*l^2", "-1/2*l + 1/2*l^3",
                "-1/15 + 4/3*l^2 - 19/15*l^4", "1/2*l - 5*l^3 + 9/2*l^5"]


def test_cosh_examples():
    c = cosh_series(HALF, 4)
    assert c.series[0] == 1
    egf = c.egf_coefficients()
    assert egf[1] == 0
    assert egf[2] == F(1, 4) and c.series[2] == F(1, 8)


def test_sinh_examples():
    s = sinh_series(HALF, 4)
    assert s.series[0] == 0
    egf = s.egf_coefficients()
    assert egf[1] == F(1, 2)
    assert egf[2] == P("-1/2*l") and s.series[2] == P("-1/4*l")


def test_tanh_half():
    t = tanh_half_series(6)
    assert t.series[0] == 0 and t.series[1] == F(1, 2)
    assert t.series[3] == P("1/6*l^2 - 1/24")
    assert [str(c) for c in t.egf_coefficients()] == TANH_FROZEN


def test_coth_half_scaled():
    c = coth_half_scaled_series(5)
    assert c.series[0] == 2 and c.series[1] == P("l")
    assert lp_eval(c.series[2], 0) == F(1, 6)
    assert [str(v) for v in c.egf_coefficients()] == ACOTH_FROZEN


def test_tanh_times_scaled_coth_is_a():
    t, c = tanh_half_series(10).series, coth_half_scaled_series(10).series
    a = ps_shift_up(Series.constant(1, 10, LAMBDA_POLY))
    assert ps_mul(t, c) == a


@pytest.mark.parametrize("x, K", [(0, 6), (HALF, 8), (1, 12)])
def test_double_angle(x, K):
    assert all(verify_double_angle(x, K))


@pytest.mark.parametrize("x, y, K", [(HALF, 0, 6), (F(1, 3), F(1, 4), 10)])
def test_addition(x, y, K):
    assert all(verify_addition(x, y, K))


def test_addition_consistent_with_double_angle():
    add_cosh, add_sinh = verify_addition(HALF, HALF, 8)
    dbl_cosh, dbl_sinh = verify_double_angle(HALF, 8)
    assert add_cosh.passed == dbl_cosh.passed and add_sinh.passed == dbl_sinh.passed
    c, s = cosh_series(HALF, 8).series, sinh_series(HALF, 8).series
    assert c * c + s * s == 2 * c * c - 1


def test_single_squared_sinh_form_fails():
    # cosh(2x) = 1 + sinh(x)^2 (missing factor 2) is false already at a^2
    c2 = cosh_series(1, 4).series
    s = sinh_series(1, 4).series
    m = ps_eq(c2, 1 + s * s)
    assert not m and m.index == 2


@settings(max_examples=20, deadline=None)
@given(rationals)
def test_pythagorean(x):
    c, s = cosh_series(x, 10).series, sinh_series(x, 10).series
    one = ps_mul(degenerate_exp_series(x, 10), degenerate_exp_series(-x, 10))
    assert c * c - s * s == one == Series.constant(1, 10, LAMBDA_POLY)


@settings(max_examples=20, deadline=None)
@given(rationals)
def test_parity(x):
    c = cosh_series(x, 8).series
    s = sinh_series(x, 8).series
    for m in range(9):
        assert c[m] == (-1) ** m * lp_reflect(c[m])
        assert s[m] == (-1) ** (m + 1) * lp_reflect(s[m])


@settings(max_examples=20, deadline=None)
@given(rationals)
def test_classical_degeneration(x):
    ce = cosh_series(x, 8).egf_coefficients()
    se = sinh_series(x, 8).egf_coefficients()
    for m in range(9):
        assert lp_eval(ce[m], 0) == (x ** m if m % 2 == 0 else 0)
        assert lp_eval(se[m], 0) == (x ** m if m % 2 else 0)


def test_json():
    doc = sinh_series(HALF, 2).to_json()
    assert doc == {"kind": "sinh", "x": "1/2", "order": 2,
                   "egf_coefficients": ["0", "1/2", "-1/2*l"]}
    assert tanh_half_series(1).to_json()["x"] is None
