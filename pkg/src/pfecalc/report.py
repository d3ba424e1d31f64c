"""Verification outcome shared by the identity checkers."""

from dataclasses import dataclass
from typing import Optional, Any


@dataclass(frozen=True)
class IdentityReport:
    name: str
    order: int
    passed: bool
    first_failure: Optional[int] = None
    lhs: Any = None
    rhs: Any = None

    def __bool__(self):
        return self.passed

    def describe(self):
        if self.passed:
            return f"{self.name}: pass (checked through order {self.order})"
        return (
            f"{self.name}: FAIL at index {self.first_failure} "
            f"(lhs={self.lhs}, rhs={self.rhs})"
        )


def check_all(name, order, pairs):
    """Build a report from an iterable of (index, lhs, rhs) triples."""
    for n, lhs, rhs in pairs:
        if lhs != rhs:
            return IdentityReport(name, order, False, n, lhs, rhs)
    return IdentityReport(name, order, True)
