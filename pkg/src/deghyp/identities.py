"""Exact coefficient-wise checks of the degenerate-hyperbolic identities.

Integrals of cosh/sinh series are assembled term by term from the number
tables (the integral of ``(x)_{n,l}`` is ``beta_{n,l}`` resp. ``E_{n,l}``),
then compared with the closed forms built by series division.  Every check
runs at symbolic lambda, so a pass is a polynomial identity.

All ``check_*`` functions accept optional replacement tables; tests use this
to inject faults.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .hyperbolic import (HALF, coth_half_scaled_series, cosh_series, sinh_series,
                         tanh_half_series, verify_addition, verify_double_angle)
from .report import IdentityReport, first_failure, sequence_report, series_report
from .ring import LAMBDA, LambdaPoly, Scalar, lp_eval, lp_reflect
from .series import (LAMBDA_POLY, RATIONAL, Series, ps_div, ps_scale_var, ps_shift_down)
from .special import (BERNOULLI, EULER, classical_numbers, cauchy_numbers,
                      degenerate_bernoulli, degenerate_euler, exp_series,
                      log1p_over_lambda_series, oracle_degenerate_number)

DEFAULT_ORDER = 16
MAX_ORDER = 24
DEFAULT_SAMPLES = ((HALF, Fraction(1, 3)),)


def _table(values: Optional[Sequence], default, n: int) -> Sequence:
    if values is None:
        return default(n).values
    if len(values) <= n:
        raise ValueError(f"table has {len(values)} entries, need {n + 1}")
    return values


def reflected_part(values: Sequence[LambdaPoly], K: int, sign: int) -> Series:
    """Series with EGF coefficients ``(v_n + sign (-1)^n v_n(-l)) / 2``, n <= K.

    ``sign=+1`` gives the integral of cosh, ``sign=-1`` that of sinh.
    """
    egf = []
    for n in range(K + 1):
        refl = lp_reflect(values[n])
        egf.append((values[n] + sign * (-1) ** n * refl) / 2)
    return Series.from_egf(egf, LAMBDA_POLY)


def lambda_a_over_log(K: int, cauchy: Optional[Sequence] = None) -> Series:
    """``l a / log(1 + l a)`` from the Cauchy numbers, with ``t -> l a``."""
    c = _table(cauchy, cauchy_numbers, K)
    return ps_scale_var(Series.from_egf(c[: K + 1], RATIONAL), LAMBDA)


def half_coth(K: int) -> Series:
    return coth_half_scaled_series(K).series / 2


def check_beta_integrals(K: int, beta: Optional[Sequence] = None,
               cauchy: Optional[Sequence] = None) -> tuple[IdentityReport, IdentityReport]:
    b = _table(beta, degenerate_bernoulli, K)
    weight = lambda_a_over_log(K, cauchy)
    even = weight * reflected_part(b, K, +1)
    odd = weight * reflected_part(b, K, -1)
    minus_half_a = Series.monomial(LambdaPoly((Fraction(-1, 2),)), 1, K, LAMBDA_POLY)
    return (
        series_report("beta-integral-cosh", even, half_coth(K), K),
        series_report("beta-integral-sinh", odd, minus_half_a, K),
    )


def check_integral_closed_forms(K: int, beta: Optional[Sequence] = None,
                                euler: Optional[Sequence] = None) -> list[IdentityReport]:
    """Closed forms of the four integrals before the half-argument rewriting.

    Volkenborn: cosh -> L sinh(1:a) / (2 (cosh(1:a) - 1)), sinh -> -L/2, with
    ``L = log(1 + l a)/l``.  Fermionic: sinh -> -sinh(1:a) / (cosh(1:a) + 1).
    """
    b = _table(beta, degenerate_bernoulli, K)
    e = _table(euler, degenerate_euler, K)
    log_l = log1p_over_lambda_series(K + 1)
    c1 = cosh_series(1, K + 2).series
    s1 = sinh_series(1, K + 2).series
    # L/a * sinh(1:a)/a over (cosh(1:a) - 1)/a^2, all regular at a = 0
    cosh_form = ps_div(ps_shift_down(log_l) * ps_shift_down(s1.truncate(K + 1)),
                       2 * ps_shift_down(c1 - 1, 2))
    sinh_form = (log_l * Fraction(-1, 2)).truncate(K)
    fermi_sinh = -ps_div(s1.truncate(K), c1.truncate(K) + 1)
    return [
        series_report("closed-form-cosh-volkenborn", reflected_part(b, K, +1), cosh_form, K),
        series_report("closed-form-sinh-volkenborn", reflected_part(b, K, -1), sinh_form, K),
        series_report("closed-form-sinh-fermionic", reflected_part(e, K, -1), fermi_sinh, K),
    ]


def check_beta_reflection(n_max: int, beta: Optional[Sequence] = None) -> IdentityReport:
    """``beta_{n,l} - (-1)^n beta_{n,-l} = -(n-1)! (-l)^(n-1)`` for 1 <= n <= n_max."""
    b = _table(beta, degenerate_bernoulli, n_max)

    def pairs():
        for n in range(1, n_max + 1):
            lhs = b[n] - (-1) ** n * lp_reflect(b[n])
            rhs = LambdaPoly.monomial(-math.factorial(n - 1) * (-1) ** (n - 1), n - 1)
            yield n, lhs, rhs

    return sequence_report("beta-reflection", pairs(), n_max)


def check_cauchy_convolution(K: int, beta: Optional[Sequence] = None,
                              cauchy: Optional[Sequence] = None) -> IdentityReport:
    """Binomial convolution of even-beta parts with ``C_j l^j`` versus ``(a/2) coth``."""
    b = _table(beta, degenerate_bernoulli, K)
    c = _table(cauchy, cauchy_numbers, K)
    even = [(b[m] + (-1) ** m * lp_reflect(b[m])) / 2 for m in range(K + 1)]
    r = []
    for n in range(K + 1):
        acc = LambdaPoly()
        for m in range(n + 1):
            acc = acc + even[m] * LambdaPoly.monomial(math.comb(n, m) * c[n - m], n - m)
        r.append(acc)
    return series_report("cauchy-convolution", Series.from_egf(r, LAMBDA_POLY),
                         half_coth(K), K)


def check_fermionic_hyperbolic(K: int, euler: Optional[Sequence] = None
                    ) -> tuple[IdentityReport, IdentityReport]:
    """Fermionic integrals: cosh gives 1; sinh gives -tanh(1/2:a) = sum_{n>=1} E_{n,l} a^n/n!."""
    e = _table(euler, degenerate_euler, K)
    check_a = series_report("fermionic-cosh", reflected_part(e, K, +1),
                            Series.constant(1, K, LAMBDA_POLY), K)
    minus_tanh = -tanh_half_series(K).series
    tail = Series.from_egf([LambdaPoly(), *e[1: K + 1]], LAMBDA_POLY)
    check_b = first_failure(
        "fermionic-sinh-tanh", K,
        series_report("", reflected_part(e, K, -1), minus_tanh, K),
        series_report("", tail, minus_tanh, K),
    )
    return check_a, check_b


def check_euler_structure(n_max: int, euler: Optional[Sequence] = None
                          ) -> tuple[IdentityReport, IdentityReport]:
    e = _table(euler, degenerate_euler, n_max)
    even = sequence_report(
        "euler-even-part", (
            (n, (e[n] + (-1) ** n * lp_reflect(e[n])) / 2, LambdaPoly((1,) if n == 0 else ()))
            for n in range(n_max + 1)),
        n_max)
    reflection = sequence_report(
        "euler-reflection",
        ((n, e[n], (-1) ** (n - 1) * lp_reflect(e[n])) for n in range(1, n_max + 1)),
        n_max)
    return even, reflection


def _at_zero(s: Series) -> Series:
    return Series([lp_eval(c, 0) for c in s.coeffs], RATIONAL)


def check_classical_limits(K: int, xs: Iterable[Scalar] = (HALF, 1),
                           beta: Optional[Sequence] = None,
                           euler: Optional[Sequence] = None) -> IdentityReport:
    """lambda = 0 reproduces B_n, E_n and the classical hyperbolic Taylor series."""
    b = _table(beta, degenerate_bernoulli, K)
    e = _table(euler, degenerate_euler, K)
    bc = classical_numbers(BERNOULLI, K)
    ec = classical_numbers(EULER, K)
    subs = [
        sequence_report("", ((n, lp_eval(b[n], 0), bc[n]) for n in range(K + 1)), K),
        sequence_report("", ((n, lp_eval(e[n], 0), ec[n]) for n in range(K + 1)), K),
    ]
    for x in xs:
        x = Fraction(x)
        ch = Series.from_egf([x ** m if m % 2 == 0 else 0 for m in range(K + 1)])
        sh = Series.from_egf([x ** m if m % 2 else 0 for m in range(K + 1)])
        subs.append(series_report("", _at_zero(cosh_series(x, K).series), ch, K))
        subs.append(series_report("", _at_zero(sinh_series(x, K).series), sh, K))
    # tanh(a/2) = (e^a - 1)/(e^a + 1);  a coth(a/2) = a (e^a + 1)/(e^a - 1)
    ex = exp_series(K + 1)
    subs.append(series_report("", _at_zero(tanh_half_series(K).series),
                              ps_div((ex - 1).truncate(K), (ex + 1).truncate(K)), K))
    subs.append(series_report("", _at_zero(coth_half_scaled_series(K).series),
                              ps_div((ex + 1).truncate(K), ps_shift_down(ex - 1)), K))
    return first_failure("classical-limits", K, *subs)


def check_oracle(K: int, beta: Optional[Sequence] = None,
                 euler: Optional[Sequence] = None) -> tuple[IdentityReport, IdentityReport]:
    b = _table(beta, degenerate_bernoulli, K)
    e = _table(euler, degenerate_euler, K)
    return (
        sequence_report("oracle-degenerate-bernoulli",
                        ((n, b[n], oracle_degenerate_number(n, BERNOULLI))
                         for n in range(K + 1)), K),
        sequence_report("oracle-degenerate-euler",
                        ((n, e[n], oracle_degenerate_number(n, EULER))
                         for n in range(K + 1)), K),
    )


def run_all(K: int = DEFAULT_ORDER, samples: Iterable[tuple[Scalar, Scalar]] = DEFAULT_SAMPLES,
            beta: Optional[Sequence] = None, euler: Optional[Sequence] = None,
            cauchy: Optional[Sequence] = None) -> list[IdentityReport]:
    """Every check in a fixed order.  ``K = 0`` checks constant terms only."""
    if not 0 <= K <= MAX_ORDER:
        raise ValueError(f"order must lie in 0..{MAX_ORDER}")
    n_max = max(K, 1)
    reports: list[IdentityReport] = []
    for x, y in samples:
        for v in dict.fromkeys((Fraction(x), Fraction(y))):
            reports.extend(verify_double_angle(v, K))
        reports.extend(verify_addition(x, y, K))
    reports.extend(check_beta_integrals(K, beta, cauchy))
    reports.extend(check_integral_closed_forms(K, beta, euler))
    reports.append(check_beta_reflection(n_max, beta))
    reports.append(check_cauchy_convolution(K, beta, cauchy))
    reports.extend(check_fermionic_hyperbolic(K, euler))
    reports.extend(check_euler_structure(n_max, euler))
    reports.append(check_classical_limits(K, beta=beta, euler=euler))
    reports.extend(check_oracle(K, beta, euler))
    return reports


def all_passed(reports: Iterable[IdentityReport]) -> bool:
    return all(r.passed for r in reports)
