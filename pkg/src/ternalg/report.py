"""Structured verdicts produced by the law checkers.

A checker evaluates a family of identities over all basis index tuples and
records every nonzero residual, up to a per-law cap.  Reports aggregate one
``LawReport`` per identity and expose a single ``passed`` flag.
"""

from __future__ import annotations

from dataclasses import dataclass, field

DEFAULT_MAX_VIOLATIONS = 10


@dataclass(frozen=True)
class Violation:
    """One failing basis index tuple (1-based) and its nonzero residual."""

    index: tuple
    residual: str


@dataclass
class LawReport:
    law: str
    tag: str
    violations: list[Violation] = field(default_factory=list)
    truncated: bool = False

    @property
    def passed(self) -> bool:
        return not self.violations

    def record(self, index: tuple, residual, cap: int) -> bool:
        """Record a violation; returns False once the cap is reached."""
        if len(self.violations) < cap:
            self.violations.append(Violation(index, str(residual)))
        if len(self.violations) >= cap:
            self.truncated = True
            return False
        return True

    def as_dict(self) -> dict:
        return {
            "law": self.law,
            "tag": self.tag,
            "passed": self.passed,
            "truncated": self.truncated,
            "violations": [
                {"index": list(v.index), "residual": v.residual}
                for v in self.violations
            ],
        }


@dataclass
class Report:
    laws: list[LawReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(lr.passed for lr in self.laws)

    def add(self, law_report: LawReport) -> None:
        self.laws.append(law_report)

    def extend(self, other: "Report") -> None:
        self.laws.extend(other.laws)

    def law(self, name: str) -> LawReport:
        for lr in self.laws:
            if lr.law == name:
                return lr
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {"passed": self.passed, "laws": [lr.as_dict() for lr in self.laws]}
