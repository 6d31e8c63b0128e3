"""Degenerate hyperbolic functions as series in ``a`` over LambdaPoly.

``cosh_l(x:a) = (e_l^x(a) + e_l^-x(a)) / 2`` and ``sinh_l`` likewise, with
``e_l^-x(a) = e_-l^x(-a)``, so the m-th EGF coefficient is
``((x)_{m,l} +/- (-1)^m (x)_{m,-l}) / 2``.  The half-argument tangent and
(scaled) cotangent are obtained by series division.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .report import IdentityReport, first_failure, series_report
from .ring import Scalar, format_element, format_rational, lp_reflect
from .series import LAMBDA_POLY, Series, ps_div, ps_shift_down
from .special import falling_factorial

COSH = "cosh"
SINH = "sinh"
TANH_HALF = "tanh-half"
COTH_HALF_SCALED = "coth-half-scaled"
HYPERBOLIC_KINDS = (COSH, SINH, TANH_HALF, COTH_HALF_SCALED)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class HyperbolicSeries:
    kind: str
    x: Optional[Fraction]
    order: int
    series: Series

    def egf_coefficients(self) -> list:
        return self.series.egf_coefficients()

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "x": None if self.x is None else format_rational(self.x),
            "order": self.order,
            "egf_coefficients": [format_element(c) for c in self.egf_coefficients()],
        }


def _parity_series(x: Scalar, K: int, sign: int) -> Series:
    egf = []
    for m in range(K + 1):
        ff = falling_factorial(x, m)
        reflected = lp_reflect(ff) if m % 2 == 0 else -lp_reflect(ff)
        egf.append((ff + sign * reflected) / 2)
    return Series.from_egf(egf, LAMBDA_POLY)


def cosh_series(x: Scalar, K: int) -> HyperbolicSeries:
    if K < 0:
        raise ValueError("order must be non-negative")
    return HyperbolicSeries(COSH, Fraction(x), K, _parity_series(x, K, +1))


def sinh_series(x: Scalar, K: int) -> HyperbolicSeries:
    if K < 0:
        raise ValueError("order must be non-negative")
    return HyperbolicSeries(SINH, Fraction(x), K, _parity_series(x, K, -1))


def tanh_half_series(K: int) -> HyperbolicSeries:
    s = ps_div(sinh_series(HALF, K).series, cosh_series(HALF, K).series)
    return HyperbolicSeries(TANH_HALF, None, K, s)


def coth_half_scaled_series(K: int) -> HyperbolicSeries:
    """Series of ``a * coth_l(1/2 : a)``, regular at ``a = 0`` with value 2."""
    if K < 0:
        raise ValueError("order must be non-negative")
    sinh = sinh_series(HALF, K + 1).series
    if not sinh[1]:
        raise ZeroDivisionError("sinh has vanishing linear coefficient; a*coth is singular")
    s = ps_div(cosh_series(HALF, K).series, ps_shift_down(sinh))
    return HyperbolicSeries(COTH_HALF_SCALED, None, K, s)


def hyperbolic_series(kind: str, K: int, x: Scalar = HALF) -> HyperbolicSeries:
    if kind == COSH:
        return cosh_series(x, K)
    if kind == SINH:
        return sinh_series(x, K)
    if kind == TANH_HALF:
        return tanh_half_series(K)
    if kind == COTH_HALF_SCALED:
        return coth_half_scaled_series(K)
    raise ValueError(f"unknown function {kind!r}")


def verify_double_angle(x: Scalar, K: int) -> tuple[IdentityReport, IdentityReport]:
    """cosh(2x) = 2cosh(x)^2 - 1 = 1 + 2sinh(x)^2 and sinh(2x) = 2 sinh(x) cosh(x)."""
    x = Fraction(x)
    c, s = cosh_series(x, K).series, sinh_series(x, K).series
    c2, s2 = cosh_series(2 * x, K).series, sinh_series(2 * x, K).series
    cosh_report = first_failure(
        f"double-angle-cosh[x={format_rational(x)}]", K,
        series_report("", c2, 2 * c * c - 1, K),
        series_report("", c2, 1 + 2 * s * s, K),
    )
    sinh_report = series_report(f"double-angle-sinh[x={format_rational(x)}]", s2, 2 * s * c, K)
    return cosh_report, sinh_report


def verify_addition(x: Scalar, y: Scalar, K: int) -> tuple[IdentityReport, IdentityReport]:
    x, y = Fraction(x), Fraction(y)
    cx, sx = cosh_series(x, K).series, sinh_series(x, K).series
    cy, sy = cosh_series(y, K).series, sinh_series(y, K).series
    tag = f"[x={format_rational(x)},y={format_rational(y)}]"
    return (
        series_report(f"addition-cosh{tag}", cosh_series(x + y, K).series, cx * cy + sx * sy, K),
        series_report(f"addition-sinh{tag}", sinh_series(x + y, K).series, sx * cy + cx * sy, K),
    )
