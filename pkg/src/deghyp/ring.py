"""Exact coefficient rings: rationals and polynomials in the deformation parameter.

Rationals are :class:`fractions.Fraction`, which is already canonical after every
operation.  Polynomials in lambda are :class:`LambdaPoly`, an immutable tuple of
Fractions in ascending degree with trailing zeros stripped.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction]

INFINITY = math.inf  # valuation of zero

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?")


def parse_rational(text: str) -> Fraction:
    """Parse ``"-3/2"`` or ``"7"``.  Decimal points are rejected."""
    s = text.strip()
    if not _RATIONAL_RE.fullmatch(s):
        raise ValueError(f"malformed rational: {text!r}")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rational(r: Scalar) -> str:
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_odd_prime(p: int) -> None:
    if not isinstance(p, int) or p == 2 or not is_prime(p):
        raise ValueError(f"expected an odd prime, got {p!r}")


def int_p_valuation(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def rat_p_valuation(r: Scalar, p: int) -> Union[int, float]:
    """Exponent of ``p`` in ``r``; :data:`INFINITY` for zero.

    >>> rat_p_valuation(Fraction(1377, 6), 3)
    3
    """
    check_odd_prime(p)
    r = Fraction(r)
    if r == 0:
        return INFINITY
    return int_p_valuation(r.numerator, p) - int_p_valuation(r.denominator, p)


class LambdaPoly:
    """Polynomial in lambda with exact rational coefficients.

    The zero polynomial has an empty coefficient tuple.  Instances are
    immutable and hashable; ``int`` and ``Fraction`` operands are promoted
    to constants.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("LambdaPoly is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> "LambdaPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, c: Scalar, k: int) -> "LambdaPoly":
        return cls([0] * k + [c])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree in lambda; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def coeff(self, k: int) -> Fraction:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else Fraction(0)

    # arithmetic

    @staticmethod
    def _lift(other) -> "LambdaPoly":
        if isinstance(other, LambdaPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LambdaPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        return LambdaPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return LambdaPoly([-c for c in self._coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LambdaPoly([c * other for c in self._coeffs])
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return LambdaPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LambdaPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # only scalars and constant polynomials are invertible
        if isinstance(other, LambdaPoly):
            if other.degree != 0:
                raise ZeroDivisionError("LambdaPoly divisor must be a nonzero constant")
            other = other._coeffs[0]
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division by zero")
        return LambdaPoly([c / other for c in self._coeffs])

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = LambdaPoly((1,)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._coeffs == other._coeffs

    def __hash__(self):
        if len(self._coeffs) <= 1:
            return hash(self.coeff(0))
        return hash(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def reflect(self) -> "LambdaPoly":
        return lp_reflect(self)

    def __call__(self, v: Scalar) -> Fraction:
        return lp_eval(self, v)

    def __repr__(self):
        return f"LambdaPoly({format_lambda_poly(self)!r})"

    def __str__(self):
        return format_lambda_poly(self)


LAMBDA = LambdaPoly((0, 1))


def lp_reflect(p: LambdaPoly) -> LambdaPoly:
    """Return q with q(lambda) = p(-lambda)."""
    return LambdaPoly([-c if k % 2 else c for k, c in enumerate(p.coeffs)])


def lp_eval(p: LambdaPoly, v: Scalar) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * v + c
    return acc


def format_lambda_poly(p: LambdaPoly, var: str = "l") -> str:
    """Render ascending terms, e.g. ``1/6 + 1/2*l`` or ``-1/2*l - l^2``."""
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{format_rational(mag)}*{power}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


_TERM_RE = re.compile(r"([+-]?)(\d+(?:/\d+)?)?(?:(\*)?l(?:\^(\d+))?)?")


def parse_lambda_poly(text: str) -> LambdaPoly:
    """Parse a sum of terms ``c``, ``c*l``, ``c*l^k`` (``l`` is lambda)."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        sign, num, star, exp = m.group(1), m.group(2), m.group(3), m.group(4)
        has_var = "l" in m.group(0)
        if m.end() == pos or (num is None and not has_var) or (pos > 0 and not sign):
            raise ValueError(f"malformed polynomial at column {pos + 1}: {text!r}")
        if star and num is None:
            raise ValueError(f"malformed polynomial at column {pos + 1}: {text!r}")
        if num is not None and has_var and not star:
            raise ValueError(f"missing '*' at column {pos + 1}: {text!r}")
        c = parse_rational(num) if num is not None else Fraction(1)
        if sign == "-":
            c = -c
        k = (int(exp) if exp is not None else 1) if has_var else 0
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
        pos = m.end()
    top = max(coeffs)
    return LambdaPoly([coeffs.get(k, 0) for k in range(top + 1)])


def format_element(c) -> str:
    """Render a ring element (Fraction or LambdaPoly)."""
    if isinstance(c, LambdaPoly):
        return format_lambda_poly(c)
    return format_rational(c)
