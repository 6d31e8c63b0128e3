"""Truncated formal power series over Fraction or LambdaPoly coefficients.

Coefficients are stored as ordinary (OGF) values ``c_0 .. c_K``.  Binary
operations truncate to the smaller order.  Exponential-generating-function
coefficients are recovered with :func:`ps_coeff_egf`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

from .ring import LambdaPoly, format_element

RATIONAL = "rational"
LAMBDA_POLY = "lambda-poly"
RINGS = (RATIONAL, LAMBDA_POLY)


class RingMismatch(TypeError):
    pass


def ring_zero(ring: str):
    return LambdaPoly() if ring == LAMBDA_POLY else Fraction(0)


def ring_one(ring: str):
    return LambdaPoly((1,)) if ring == LAMBDA_POLY else Fraction(1)


def _coerce(c, ring: str):
    if ring == LAMBDA_POLY:
        return c if isinstance(c, LambdaPoly) else LambdaPoly((c,))
    if isinstance(c, LambdaPoly):
        if not c.is_constant():
            raise RingMismatch(f"non-constant polynomial {c} in rational series")
        return c.coeff(0)
    return Fraction(c)


class Series:
    """Immutable truncated power series ``c_0 + c_1 v + ... + c_K v^K``."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, coeffs: Iterable[Any], ring: str = RATIONAL):
        if ring not in RINGS:
            raise ValueError(f"unknown ring {ring!r}")
        cs = tuple(_coerce(c, ring) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, c, order: int, ring: str = RATIONAL) -> "Series":
        return cls([c] + [ring_zero(ring)] * order, ring)

    @classmethod
    def zero(cls, order: int, ring: str = RATIONAL) -> "Series":
        return cls.constant(ring_zero(ring), order, ring)

    @classmethod
    def monomial(cls, c, k: int, order: int, ring: str = RATIONAL) -> "Series":
        cs = [ring_zero(ring)] * (order + 1)
        if k <= order:
            cs[k] = c
        return cls(cs, ring)

    @classmethod
    def from_egf(cls, values: Sequence[Any], ring: str = RATIONAL) -> "Series":
        """Build from EGF coefficients, i.e. ``c_n = values[n] / n!``."""
        return cls([v / math.factorial(n) for n, v in enumerate(values)], ring)

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return Series(self.coeffs[: order + 1], self.ring)

    def to_lambda(self) -> "Series":
        if self.ring == LAMBDA_POLY:
            return self
        return Series(self.coeffs, LAMBDA_POLY)

    def egf_coefficients(self) -> list:
        return [ps_coeff_egf(self, n) for n in range(self.order + 1)]

    def map(self, fn) -> "Series":
        return Series([fn(c) for c in self.coeffs], self.ring)

    def __add__(self, other):
        if isinstance(other, Series):
            return ps_add(self, other)
        return Series([self.coeffs[0] + other, *self.coeffs[1:]], self.ring)

    __radd__ = __add__

    def __neg__(self):
        return self.map(lambda c: -c)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Series):
            return ps_mul(self, other)
        return self.map(lambda c: c * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Series):
            return ps_div(self, other)
        return self.map(lambda c: c / other)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        return f"Series({render_series(self)!r}, ring={self.ring!r}, order={self.order})"

    def __str__(self):
        return render_series(self)


def _check_rings(s1: Series, s2: Series) -> None:
    if s1.ring != s2.ring:
        raise RingMismatch(f"ring mismatch: {s1.ring} vs {s2.ring}")


def ps_add(s1: Series, s2: Series) -> Series:
    _check_rings(s1, s2)
    k = min(s1.order, s2.order)
    return Series([s1.coeffs[i] + s2.coeffs[i] for i in range(k + 1)], s1.ring)


def ps_mul(s1: Series, s2: Series) -> Series:
    _check_rings(s1, s2)
    k = min(s1.order, s2.order)
    a, b = s1.coeffs, s2.coeffs
    out = []
    for n in range(k + 1):
        acc = ring_zero(s1.ring)
        for i in range(n + 1):
            if a[i] and b[n - i]:
                acc = acc + a[i] * b[n - i]
        out.append(acc)
    return Series(out, s1.ring)


def _unit_inverse(c, ring: str):
    if ring == LAMBDA_POLY:
        if c.degree != 0:
            raise ZeroDivisionError(
                f"leading coefficient {c} is not a unit; factor out the variable first")
        return LambdaPoly((1 / c.coeff(0),))
    if c == 0:
        raise ZeroDivisionError("leading coefficient is zero; factor out the variable first")
    return 1 / c


def ps_div(num: Series, den: Series) -> Series:
    """Quotient by forward substitution; ``den[0]`` must be a unit."""
    _check_rings(num, den)
    k = min(num.order, den.order)
    inv = _unit_inverse(den.coeffs[0], den.ring)
    q = []
    for n in range(k + 1):
        acc = num.coeffs[n]
        for i in range(1, n + 1):
            if den.coeffs[i] and q[n - i]:
                acc = acc - den.coeffs[i] * q[n - i]
        q.append(acc * inv)
    return Series(q, num.ring)


def ps_scale_var(s: Series, c) -> Series:
    """Substitute ``v -> c*v``.  A LambdaPoly factor promotes a rational series."""
    if isinstance(c, LambdaPoly) and s.ring == RATIONAL:
        s = s.to_lambda()
    out, power = [], ring_one(s.ring)
    for coeff in s.coeffs:
        out.append(coeff * power)
        power = power * c
    return Series(out, s.ring)


def ps_shift_down(s: Series, k: int = 1) -> Series:
    """Divide by ``v^k``; the first ``k`` coefficients must vanish."""
    if k > s.order:
        raise ValueError(f"cannot remove {k} leading terms from order {s.order}")
    for i in range(k):
        if s.coeffs[i]:
            raise ValueError(f"coefficient {i} is nonzero; series not divisible by v^{k}")
    return Series(s.coeffs[k:], s.ring)


def ps_shift_up(s: Series, k: int = 1) -> Series:
    """Multiply by ``v^k`` keeping the order."""
    z = ring_zero(s.ring)
    return Series(([z] * k + list(s.coeffs))[: s.order + 1], s.ring)


@dataclass(frozen=True)
class SeriesMatch:
    matched: bool
    upto: int
    index: Optional[int] = None
    lhs: Any = None
    rhs: Any = None

    def __bool__(self):
        return self.matched


def ps_eq(s1: Series, s2: Series, upto: Optional[int] = None) -> SeriesMatch:
    """Compare ``c_0 .. c_upto``; on mismatch report the first failing index."""
    if upto is None:
        upto = min(s1.order, s2.order)
    if upto > s1.order or upto > s2.order:
        raise ValueError(f"upto={upto} exceeds series order ({s1.order}, {s2.order})")
    for n in range(upto + 1):
        if s1.coeffs[n] != s2.coeffs[n]:
            return SeriesMatch(False, upto, n, s1.coeffs[n], s2.coeffs[n])
    return SeriesMatch(True, upto)


def ps_coeff_egf(s: Series, n: int):
    if not 0 <= n <= s.order:
        raise IndexError(f"index {n} outside 0..{s.order}")
    return s.coeffs[n] * math.factorial(n)


def render_series(s: Series, var: str = "a") -> str:
    parts = []
    for n, c in enumerate(s.coeffs):
        if not c:
            continue
        text = format_element(c)
        if isinstance(c, LambdaPoly) and len([x for x in c.coeffs if x]) > 1:
            text = f"({text})"
        if n == 0:
            term = text
        elif n == 1:
            term = f"{text}*{var}"
        else:
            term = f"{text}*{var}^{n}"
        if parts:
            term = f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        parts.append(term)
    return "".join(parts) if parts else "0"


def series_to_json(s: Series) -> list[str]:
    return [format_element(c) for c in s.coeffs]
