from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from .ring import format_element
from .series import Series, ps_eq


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one exact identity check.

    ``lhs_coeff``/``rhs_coeff`` hold the first disagreeing coefficients
    (ordinary series coefficients for series identities, table entries for
    number identities).
    """

    name: str
    order: int
    passed: bool
    first_failure_index: Optional[int] = None
    lhs_coeff: Any = None
    rhs_coeff: Any = None

    def __post_init__(self):
        if self.passed != (self.first_failure_index is None):
            raise ValueError("passed must be true exactly when no failure index is set")

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "passed": self.passed,
            "first_failure_index": self.first_failure_index,
            "lhs_coeff": None if self.lhs_coeff is None else format_element(self.lhs_coeff),
            "rhs_coeff": None if self.rhs_coeff is None else format_element(self.rhs_coeff),
        }

    def describe(self) -> str:
        if self.passed:
            return f"PASS  {self.name} (order {self.order})"
        return (f"FAIL  {self.name} (order {self.order}) at index {self.first_failure_index}: "
                f"{format_element(self.lhs_coeff)} != {format_element(self.rhs_coeff)}")


def series_report(name: str, lhs: Series, rhs: Series, order: int) -> IdentityReport:
    m = ps_eq(lhs, rhs, order)
    if m:
        return IdentityReport(name, order, True)
    return IdentityReport(name, order, False, m.index, m.lhs, m.rhs)


def sequence_report(name: str, pairs, order: int) -> IdentityReport:
    """Compare ``(index, lhs, rhs)`` triples in order; stop at the first mismatch."""
    for n, lhs, rhs in pairs:
        if lhs != rhs:
            return IdentityReport(name, order, False, n, lhs, rhs)
    return IdentityReport(name, order, True)


def first_failure(name: str, order: int, *reports: IdentityReport) -> IdentityReport:
    """Merge sub-checks of one statement into a single report."""
    for r in reports:
        if not r.passed:
            return IdentityReport(name, order, False, r.first_failure_index,
                                  r.lhs_coeff, r.rhs_coeff)
    return IdentityReport(name, order, True)
