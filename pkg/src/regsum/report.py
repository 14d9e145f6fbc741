"""Uniform pass/fail rows for identity checks and verification suites."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, List, Optional

from .exact import format_rational


def render_value(v: Any) -> Optional[str]:
    if v is None:
        return None
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, Fraction)):
        return format_rational(v)
    if isinstance(v, float):
        return f"{v:.15g}"
    if hasattr(v, "canonical"):
        return v.canonical()
    return str(v)


@dataclass(frozen=True)
class CheckResult:
    check: str
    k: Optional[int]
    passed: bool
    lhs: Any = None
    rhs: Any = None

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "k": self.k,
            "pass": self.passed,
            "lhs": render_value(self.lhs),
            "rhs": render_value(self.rhs),
        }


def equality(check: str, k: Optional[int], lhs: Any, rhs: Any) -> CheckResult:
    return CheckResult(check, k, lhs == rhs, lhs, rhs)


def first_failure(rows: Iterable[CheckResult]) -> Optional[CheckResult]:
    for row in rows:
        if not row.passed:
            return row
    return None


def ordered(rows: Iterable[CheckResult]) -> List[CheckResult]:
    return sorted(rows, key=lambda r: (r.check, -1 if r.k is None else r.k))
