"""Finite-level Volkenborn and fermionic sums of polynomial integrands.

The level-N sums

    S_N(f) = p^-N * sum_{x < p^N} f(x)         (Volkenborn)
    T_N(f) = sum_{x < p^N} (-1)^x f(x)          (fermionic)

are evaluated exactly from closed-form power sums, so level 12 costs the same
as level 1.  Results are compared against the exact integrals in the p-adic
metric.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .ring import (INFINITY, Scalar, check_odd_prime, format_rational, int_p_valuation,
                   lp_eval, rat_p_valuation)
from .special import (BERNOULLI, EULER, classical_numbers, degenerate_bernoulli,
                      degenerate_euler, stirling_first)

MAX_DEGREE = 12
VOLKENBORN = "volkenborn"
FERMIONIC = "fermionic"
MEASURES = (VOLKENBORN, FERMIONIC)
MONOMIAL = "monomial"
FALLING = "falling"


@dataclass(frozen=True)
class PadicContext:
    p: int
    precision: int = 20

    def __post_init__(self):
        check_odd_prime(self.p)
        if self.precision < 1:
            raise ValueError("precision must be at least 1")

    @property
    def modulus(self) -> int:
        return self.p ** self.precision


@dataclass(frozen=True)
class PadicNumber:
    """``p^valuation * unit`` with ``unit`` known modulo ``p^precision``."""

    valuation: Union[int, float]
    unit: int

    @property
    def is_zero(self) -> bool:
        return self.valuation == INFINITY

    def norm(self, ctx: PadicContext) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        return Fraction(1, ctx.p ** self.valuation) if self.valuation >= 0 \
            else Fraction(ctx.p ** -self.valuation)


PADIC_ZERO = PadicNumber(INFINITY, 0)


@dataclass(frozen=True)
class IntegrandSpec:
    """A polynomial integrand, in monomial or lambda-falling-factorial form.

    ``terms`` holds ``(coefficient, degree)`` pairs in descending degree with
    no zero coefficients; for the falling basis it is empty and ``n``/``lam``
    are set instead.
    """

    basis: str
    terms: tuple[tuple[Fraction, int], ...] = ()
    n: Optional[int] = None
    lam: Optional[Fraction] = None
    measure: str = VOLKENBORN

    def __post_init__(self):
        if self.basis not in (MONOMIAL, FALLING):
            raise ValueError(f"unknown basis {self.basis!r}")
        if self.measure not in MEASURES:
            raise ValueError(f"unknown measure {self.measure!r}")
        if self.degree > MAX_DEGREE:
            raise ValueError(f"degree {self.degree} exceeds the cap of {MAX_DEGREE}")
        if self.basis == FALLING and (self.n is None or self.n < 0 or self.lam is None):
            raise ValueError("falling basis needs n >= 0 and a rational lambda")

    @classmethod
    def monomials(cls, terms, measure: str = VOLKENBORN) -> "IntegrandSpec":
        acc: dict[int, Fraction] = {}
        for c, k in terms:
            if k < 0:
                raise ValueError(f"negative degree {k}")
            acc[k] = acc.get(k, Fraction(0)) + Fraction(c)
        norm = tuple((c, k) for k, c in sorted(acc.items(), reverse=True) if c != 0)
        return cls(MONOMIAL, norm, measure=measure)

    @classmethod
    def falling(cls, n: int, lam: Scalar, measure: str = VOLKENBORN) -> "IntegrandSpec":
        return cls(FALLING, (), n, Fraction(lam), measure)

    def with_measure(self, measure: str) -> "IntegrandSpec":
        return IntegrandSpec(self.basis, self.terms, self.n, self.lam, measure)

    @property
    def degree(self) -> int:
        if self.basis == FALLING:
            return self.n if self.n is not None else 0
        return max((k for _, k in self.terms), default=0)

    def coefficients(self) -> list[Fraction]:
        """Ascending monomial coefficients."""
        if self.basis == FALLING:
            # (x)_{n,l} = sum_k s(n,k) l^(n-k) x^k
            return [stirling_first(self.n, k) * self.lam ** (self.n - k)
                    for k in range(self.n + 1)]
        cs = [Fraction(0)] * (self.degree + 1)
        for c, k in self.terms:
            cs[k] += c
        return cs

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients()):
            acc = acc * x + c
        return acc


def _check_integrand(f: IntegrandSpec, ctx: PadicContext) -> None:
    if f.degree > MAX_DEGREE:
        raise ValueError(f"degree {f.degree} exceeds the cap of {MAX_DEGREE}")
    if f.basis == FALLING and rat_p_valuation(f.lam, ctx.p) < 0:
        raise ValueError(f"lambda={format_rational(f.lam)} is not a {ctx.p}-adic integer")


def power_sum(k: int, m: int) -> Fraction:
    """``sum_{x=0}^{m-1} x^k`` by Faulhaber's formula."""
    b = classical_numbers(BERNOULLI, k)
    return sum((math.comb(k + 1, j) * b[j] * m ** (k + 1 - j) for j in range(k + 1)),
               Fraction(0)) / (k + 1)


def alternating_power_sum(k: int, m: int) -> Fraction:
    """``sum_{x=0}^{m-1} (-1)^x x^k`` via Euler polynomials.

    Telescopes ``E_k(x+1) + E_k(x) = 2 x^k`` to ``(E_k(0) - (-1)^m E_k(m)) / 2``.
    """
    e = classical_numbers(EULER, k)
    ek_m = sum((math.comb(k, j) * e[j] * m ** (k - j) for j in range(k + 1)), Fraction(0))
    return (e[k] - (-1) ** m * ek_m) / 2


def volkenborn_rational(f: IntegrandSpec, p: int, N: int) -> Fraction:
    if N < 1:
        raise ValueError("level N must be at least 1")
    m = p ** N
    return sum((c * power_sum(k, m) for k, c in enumerate(f.coefficients()) if c),
               Fraction(0)) / m


def fermionic_rational(f: IntegrandSpec, p: int, N: int) -> Fraction:
    if N < 1:
        raise ValueError("level N must be at least 1")
    m = p ** N
    return sum((c * alternating_power_sum(k, m) for k, c in enumerate(f.coefficients()) if c),
               Fraction(0))


def exact_to_padic(r: Scalar, ctx: PadicContext) -> PadicNumber:
    r = Fraction(r)
    if r == 0:
        return PADIC_ZERO
    p = ctx.p
    a, b = int_p_valuation(r.numerator, p), int_p_valuation(r.denominator, p)
    num, den = r.numerator // p ** a, r.denominator // p ** b
    unit = num * pow(den, -1, ctx.modulus) % ctx.modulus
    return PadicNumber(a - b, unit)


def volkenborn_sum(f: IntegrandSpec, ctx: PadicContext, N: int) -> PadicNumber:
    _check_integrand(f, ctx)
    return exact_to_padic(volkenborn_rational(f, ctx.p, N), ctx)


def fermionic_sum(f: IntegrandSpec, ctx: PadicContext, N: int) -> PadicNumber:
    _check_integrand(f, ctx)
    return exact_to_padic(fermionic_rational(f, ctx.p, N), ctx)


def padic_distance(u: PadicNumber, v: PadicNumber, ctx: PadicContext) -> Fraction:
    """``|u - v|_p`` from the residues; 0 when they agree to full precision."""
    if u.is_zero and v.is_zero:
        return Fraction(0)
    if u.is_zero or v.is_zero:
        return (v if u.is_zero else u).norm(ctx)
    m = min(u.valuation, v.valuation)
    diff = (u.unit * ctx.p ** (u.valuation - m) - v.unit * ctx.p ** (v.valuation - m)) \
        % ctx.modulus
    if diff == 0:
        return Fraction(0)
    return PadicNumber(m + int_p_valuation(diff, ctx.p), 1).norm(ctx)


def exact_integral(f: IntegrandSpec, measure: Optional[str] = None) -> Fraction:
    """Limit value of the sums: ``sum c_k B_k`` or ``sum c_k E_k``."""
    measure = measure or f.measure
    if f.basis == FALLING:
        table = degenerate_bernoulli(f.n) if measure == VOLKENBORN else degenerate_euler(f.n)
        return lp_eval(table[f.n], f.lam)
    cs = f.coefficients()
    kind = BERNOULLI if measure == VOLKENBORN else EULER
    table = classical_numbers(kind, len(cs) - 1)
    return sum((c * table[k] for k, c in enumerate(cs)), Fraction(0))


def finite_sum(f: IntegrandSpec, p: int, N: int, measure: Optional[str] = None) -> Fraction:
    measure = measure or f.measure
    if measure == VOLKENBORN:
        return volkenborn_rational(f, p, N)
    return fermionic_rational(f, p, N)


def format_distance(d: Fraction, p: int) -> str:
    """Render ``p^-k``; exact agreement renders as ``0``."""
    if d == 0:
        return "0"
    w = int_p_valuation(d.denominator, p) - int_p_valuation(d.numerator, p)
    return f"{p}^{-w}"


def shift_polynomial(f: IntegrandSpec) -> IntegrandSpec:
    """The integrand ``x -> f(x + 1)`` in monomial form."""
    cs = f.coefficients()
    out = [Fraction(0)] * len(cs)
    for k, c in enumerate(cs):
        for j in range(k + 1):
            out[j] += c * math.comb(k, j)
    return IntegrandSpec.monomials(((c, k) for k, c in enumerate(out)), f.measure)


@dataclass(frozen=True)
class ShiftReport:
    measure: str
    p: int
    N: int
    lhs: Fraction          # S_N(f(.+1)) - S_N(f), or T_N(f(.+1)) + T_N(f)
    closed_form: Fraction  # (f(p^N) - f(0))/p^N, or f(0) + f(p^N)
    target: Fraction       # f'(0), or 2 f(0)
    distance: Fraction

    @property
    def telescopes(self) -> bool:
        return self.lhs == self.closed_form

    @property
    def residual(self) -> Fraction:
        return self.lhs - self.target


def verify_shift_equation(f: IntegrandSpec, ctx: PadicContext, N: int,
                          measure: Optional[str] = None) -> ShiftReport:
    measure = measure or f.measure
    _check_integrand(f, ctx)
    g = shift_polynomial(f)
    m = ctx.p ** N
    if measure == VOLKENBORN:
        lhs = volkenborn_rational(g, ctx.p, N) - volkenborn_rational(f, ctx.p, N)
        closed = (f(m) - f(0)) / m
        cs = f.coefficients()
        target = cs[1] if len(cs) > 1 else Fraction(0)
    else:
        lhs = fermionic_rational(g, ctx.p, N) + fermionic_rational(f, ctx.p, N)
        closed = f(0) + f(m)
        target = 2 * f(0)
    dist = padic_distance(exact_to_padic(lhs, ctx), exact_to_padic(target, ctx), ctx)
    return ShiftReport(measure, ctx.p, N, lhs, closed, target, dist)


@dataclass(frozen=True)
class ConvergenceRow:
    N: int
    value: Fraction
    distance: Fraction


@dataclass(frozen=True)
class ConvergenceTable:
    p: int
    measure: str
    exact: Fraction
    rows: tuple[ConvergenceRow, ...]
    n: Optional[int] = None
    lam: Optional[Fraction] = None
    integrand: Optional[str] = None

    @property
    def monotone(self) -> bool:
        ds = [r.distance for r in self.rows]
        return all(a >= b for a, b in zip(ds, ds[1:]))

    def to_json(self) -> dict:
        out = {
            "p": self.p,
            "lambda": None if self.lam is None else format_rational(self.lam),
            "n": self.n,
            "measure": self.measure,
            "exact": format_rational(self.exact),
            "rows": [{"N": r.N, "sum": format_rational(r.value),
                      "distance": format_distance(r.distance, self.p)} for r in self.rows],
        }
        if self.integrand is not None:
            out["integrand"] = self.integrand
        return out


def convergence_table(f: IntegrandSpec, ctx: PadicContext, levels: Sequence[int],
                      measure: Optional[str] = None, exact: Optional[Fraction] = None
                      ) -> ConvergenceTable:
    measure = measure or f.measure
    _check_integrand(f, ctx)
    if list(levels) != sorted(levels) or any(N < 1 for N in levels):
        raise ValueError("levels must be ascending and at least 1")
    if exact is None:
        exact = exact_integral(f, measure)
    target = exact_to_padic(exact, ctx)
    rows = []
    for N in levels:
        value = finite_sum(f, ctx.p, N, measure)
        rows.append(ConvergenceRow(N, value,
                                   padic_distance(exact_to_padic(value, ctx), target, ctx)))
    n, lam = (f.n, f.lam) if f.basis == FALLING else (None, None)
    return ConvergenceTable(ctx.p, measure, exact, tuple(rows), n, lam)


def convergence_report(n: int, lam: Scalar, ctx: PadicContext, levels: Sequence[int]
                       ) -> dict[str, ConvergenceTable]:
    """Distances of S_N and T_N of ``(x)_{n,lam}`` from the degenerate numbers at ``lam``."""
    if not 0 <= n <= 8:
        raise ValueError("n must lie in 0..8")
    lam = Fraction(lam)
    f = IntegrandSpec.falling(n, lam)
    _check_integrand(f, ctx)
    return {
        VOLKENBORN: convergence_table(f, ctx, levels, VOLKENBORN,
                                      lp_eval(degenerate_bernoulli(n)[n], lam)),
        FERMIONIC: convergence_table(f, ctx, levels, FERMIONIC,
                                     lp_eval(degenerate_euler(n)[n], lam)),
    }
