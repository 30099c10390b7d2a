"""Uniform pass/fail reporting for verification checks."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of one named check.

    ``passed`` is equivalent to ``max_residual < tolerance`` together with
    any structural matches recorded in the details (table rows, existence
    checks and the like).
    """

    name: str
    passed: bool
    max_residual: float
    tolerance: float
    details: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "passed": self.passed,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "details": self.details,
        }

    def summary_line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] {self.name}  (max residual {self.max_residual:.3e}, tol {self.tolerance:.1e})"
