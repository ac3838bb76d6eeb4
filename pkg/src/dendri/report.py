"""Check reports shared by every verifier."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Violation:
    check: str
    where: tuple
    defect: Any = None

    def __str__(self):
        loc = ", ".join(str(w) for w in self.where)
        return f"{self.check} fails at ({loc})"


@dataclass
class Report:
    """Outcome of a verification: ``ok`` iff no violations were recorded.

    ``checks`` maps each named sub-check to its verdict, so a report can say
    which of several conditions held even when the overall verdict is false.
    """

    name: str
    violations: list[Violation] = field(default_factory=list)
    checks: dict[str, bool] = field(default_factory=dict)
    evidence: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations and all(self.checks.values())

    def __bool__(self):
        return self.ok

    def add(self, check: str, where: tuple, defect=None):
        self.violations.append(Violation(check, tuple(where), defect))
        self.checks[check] = False

    def mark(self, check: str):
        self.checks.setdefault(check, True)

    def merge(self, other: "Report", prefix: str = ""):
        for v in other.violations:
            self.violations.append(Violation(prefix + v.check, v.where, v.defect))
        for k, ok in other.checks.items():
            key = prefix + k
            self.checks[key] = self.checks.get(key, True) and ok
        return self

    def failed(self) -> list[str]:
        return [k for k, ok in self.checks.items() if not ok]

    def summary(self) -> str:
        if self.ok:
            return f"{self.name}: ok"
        lines = [f"{self.name}: FAILED ({len(self.violations)} violation(s))"]
        lines += [f"  {v}" for v in self.violations[:20]]
        if len(self.violations) > 20:
            lines.append(f"  ... {len(self.violations) - 20} more")
        return "\n".join(lines)
