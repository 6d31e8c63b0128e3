from fractions import Fraction as F

import pytest

from conftest import P
from deghyp.identities import (all_passed, check_classical_limits, check_euler_structure,
                               check_integral_closed_forms, check_oracle, check_beta_integrals,
                               check_cauchy_convolution, check_beta_reflection,
                               check_fermionic_hyperbolic, half_coth, lambda_a_over_log, reflected_part,
                               run_all)
from deghyp.report import IdentityReport
from deghyp.ring import LAMBDA, LambdaPoly, lp_reflect
from deghyp.special import degenerate_bernoulli, degenerate_euler


def corrupt(values, n, delta=LAMBDA):
    vals = list(values)
    vals[n] = vals[n] + delta
    return vals


def test_beta_integrals_low_order():
    b = degenerate_bernoulli(4).values
    even = lambda_a_over_log(4) * reflected_part(b, 4, +1)
    assert even[0] == 1 == half_coth(4)[0]
    assert even[1] == P("1/2*l") == half_coth(4)[1]


def test_beta_integrals():
    cosh_rel, sinh_rel = check_beta_integrals(16)
    assert cosh_rel.passed and sinh_rel.passed


def test_beta_reflection_examples():
    b = degenerate_bernoulli(3).values
    lhs = [b[n] - (-1) ** n * lp_reflect(b[n]) for n in (1, 2, 3)]
    assert lhs == [-1, LAMBDA, P("-2*l^2")]
    assert check_beta_reflection(16)


def test_cauchy_convolution():
    assert check_cauchy_convolution(12)


def test_fermionic_hyperbolic_examples():
    e = degenerate_euler(3).values
    assert (e[0] + e[0]) / 2 == 1
    assert e[2] == P("1/2*l")
    assert e[3] == P("-l^2 + 1/4")
    a, b = check_fermionic_hyperbolic(16)
    assert a.passed and b.passed


def test_euler_structure():
    even, refl = check_euler_structure(16)
    assert even.passed and refl.passed


def test_closed_forms_and_limits():
    assert all(check_integral_closed_forms(12))
    assert check_classical_limits(16)
    assert all(check_oracle(12))


def test_run_all_default_and_reproducible():
    first = run_all()
    assert all_passed(first)
    assert [r.to_json() for r in run_all()] == [r.to_json() for r in first]


def test_run_all_order_zero():
    reports = run_all(0)
    assert all_passed(reports)
    assert {r.order for r in reports if "reflection" not in r.name
            and "even-part" not in r.name} == {0}


def test_run_all_rejects_large_order():
    with pytest.raises(ValueError):
        run_all(25)


def test_corrupted_beta_fails_reflection():
    bad = corrupt(degenerate_bernoulli(16).values, 5, F(1))
    report = check_beta_reflection(16, bad)
    assert not report.passed and report.first_failure_index == 5
    reports = {r.name: r for r in run_all(16, beta=bad)}
    assert reports["beta-reflection"].first_failure_index == 5
    assert not reports["oracle-degenerate-bernoulli"].passed
    assert not all_passed(reports.values())


def test_corrupted_euler_fails():
    bad = corrupt(degenerate_euler(16).values, 3, LAMBDA)
    a, b = check_fermionic_hyperbolic(16, bad)
    assert b.first_failure_index == 3
    even, refl = check_euler_structure(16, bad)
    assert even.first_failure_index == 3 and refl.first_failure_index == 3


def test_report_invariant():
    with pytest.raises(ValueError):
        IdentityReport("x", 1, True, 3)
    with pytest.raises(ValueError):
        IdentityReport("x", 1, False)
    r = IdentityReport("x", 2, False, 1, LambdaPoly([1]), LAMBDA)
    assert r.to_json() == {"name": "x", "order": 2, "passed": False,
                           "first_failure_index": 1, "lhs_coeff": "1", "rhs_coeff": "l"}
