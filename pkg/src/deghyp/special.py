"""Falling factorials, degenerate exponentials and the special-number tables.

The degenerate Bernoulli and Euler numbers are computed at symbolic lambda from
their generating functions.  ``oracle_degenerate_number`` recomputes them from
Stirling numbers and the classical tables, which are in turn produced by
methods that never touch the degenerate generating functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .ring import LAMBDA, LambdaPoly, Scalar, format_element
from .series import LAMBDA_POLY, RATIONAL, Series, ps_coeff_egf, ps_div, ps_shift_down

DEGENERATE_BERNOULLI = "degenerate-bernoulli"
DEGENERATE_EULER = "degenerate-euler"
CAUCHY = "cauchy"
BERNOULLI = "bernoulli"
EULER = "euler"
KINDS = (DEGENERATE_BERNOULLI, DEGENERATE_EULER, CAUCHY, BERNOULLI, EULER)


@dataclass(frozen=True)
class NumberTable:
    kind: str
    max_index: int
    values: tuple[Union[LambdaPoly, Fraction], ...]

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def at(self, lam: Scalar) -> "NumberTable":
        """Evaluate a degenerate table at a numeric lambda."""
        if self.kind not in (DEGENERATE_BERNOULLI, DEGENERATE_EULER):
            return self
        return NumberTable(self.kind, self.max_index, tuple(v(lam) for v in self.values))

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "max_index": self.max_index,
            "values": [format_element(v) for v in self.values],
        }


def falling_factorial(x: Scalar, n: int) -> LambdaPoly:
    """``x (x - l) ... (x - (n-1) l)`` as a polynomial in lambda."""
    if n < 0:
        raise ValueError(f"negative index n={n}")
    x = Fraction(x)
    out = LambdaPoly((1,))
    for j in range(n):
        out = out * LambdaPoly((x, -j))
    return out


def degenerate_exp_series(x: Scalar, K: int) -> Series:
    """Series in t of ``(1 + l t)^(x/l)``, coefficient ``(x)_{n,l} / n!``."""
    if K < 0:
        raise ValueError("order must be non-negative")
    return Series.from_egf([falling_factorial(x, n) for n in range(K + 1)], LAMBDA_POLY)


def log1p_over_lambda_series(K: int) -> Series:
    """Series of ``log(1 + l t) / l``: ``c_k = (-1)^(k-1) l^(k-1) / k``."""
    if K < 1:
        raise ValueError("order must be at least 1")
    cs = [LambdaPoly()]
    for k in range(1, K + 1):
        cs.append(LambdaPoly.monomial(Fraction((-1) ** (k - 1), k), k - 1))
    return Series(cs, LAMBDA_POLY)


def exp_series(K: int) -> Series:
    return Series([Fraction(1, math.factorial(n)) for n in range(K + 1)], RATIONAL)


def log1p_series(K: int) -> Series:
    return Series([Fraction(0)] + [Fraction((-1) ** (k - 1), k) for k in range(1, K + 1)],
                  RATIONAL)


def _egf_table(kind: str, s: Series) -> NumberTable:
    return NumberTable(kind, s.order, tuple(ps_coeff_egf(s, n) for n in range(s.order + 1)))


@lru_cache(maxsize=None)
def degenerate_bernoulli(K: int) -> NumberTable:
    # log(1+lt)/l and e_l(t) - 1 both start with t; cancel it before dividing
    num = ps_shift_down(log1p_over_lambda_series(K + 1))
    den = degenerate_exp_series(1, K + 1)
    den = ps_shift_down(Series([LambdaPoly(), *den.coeffs[1:]], LAMBDA_POLY))
    return _egf_table(DEGENERATE_BERNOULLI, ps_div(num, den))


@lru_cache(maxsize=None)
def degenerate_euler(K: int) -> NumberTable:
    den = degenerate_exp_series(1, K) + 1
    two = Series.constant(2, K, LAMBDA_POLY)
    return _egf_table(DEGENERATE_EULER, ps_div(two, den))


@lru_cache(maxsize=None)
def cauchy_numbers(K: int) -> NumberTable:
    den = ps_shift_down(log1p_series(K + 1))
    return _egf_table(CAUCHY, ps_div(Series.constant(1, K), den))


@lru_cache(maxsize=None)
def classical_numbers(kind: str, K: int) -> NumberTable:
    if K < 0:
        raise ValueError("order must be non-negative")
    if kind == BERNOULLI:
        # sum_{k<=n} C(n+1, k) B_k = 0 for n >= 1
        b = [Fraction(1)]
        for n in range(1, K + 1):
            b.append(-sum(math.comb(n + 1, k) * b[k] for k in range(n)) / (n + 1))
        return NumberTable(BERNOULLI, K, tuple(b))
    if kind == EULER:
        den = exp_series(K) + 1
        return _egf_table(EULER, ps_div(Series.constant(2, K), den))
    raise ValueError(f"unknown classical kind {kind!r}")


@lru_cache(maxsize=None)
def _stirling_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling_row(n - 1) + (0,)
    m = n - 1
    return tuple((prev[k - 1] if k else 0) - m * prev[k] for k in range(n + 1))


def stirling_first(n: int, k: int) -> int:
    """Signed Stirling number of the first kind, ``(x)_n = sum_k s(n,k) x^k``."""
    if n < 0 or not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return _stirling_row(n)[k]


def oracle_degenerate_number(n: int, kind: str) -> LambdaPoly:
    """``sum_k s(n,k) l^(n-k) B_k`` (or ``E_k``), from integrating the falling factorial termwise."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if kind in (BERNOULLI, DEGENERATE_BERNOULLI):
        table = classical_numbers(BERNOULLI, n)
    elif kind in (EULER, DEGENERATE_EULER):
        table = classical_numbers(EULER, n)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    out = LambdaPoly()
    for k in range(n + 1):
        out = out + LambdaPoly.monomial(stirling_first(n, k) * table[k], n - k)
    return out


def number_table(kind: str, K: int) -> NumberTable:
    if kind == DEGENERATE_BERNOULLI:
        return degenerate_bernoulli(K)
    if kind == DEGENERATE_EULER:
        return degenerate_euler(K)
    if kind == CAUCHY:
        return cauchy_numbers(K)
    if kind in (BERNOULLI, EULER):
        return classical_numbers(kind, K)
    raise ValueError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")


__all__ = [
    "NumberTable", "KINDS", "LAMBDA", "falling_factorial", "degenerate_exp_series",
    "log1p_over_lambda_series", "degenerate_bernoulli", "degenerate_euler",
    "cauchy_numbers", "classical_numbers", "stirling_first", "oracle_degenerate_number",
    "number_table", "exp_series", "log1p_series",
]
