"""Verification reports: named checks with worst-case residuals."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    residual: float | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.residual is not None:
            out["residual"] = float(f"{float(self.residual):.12g}")
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, residual: float | None = None, detail: str = "") -> Check:
        check = Check(name, bool(passed), residual, detail)
        self.checks.append(check)
        return check

    def residual_check(self, name: str, residual: float, tol: float, detail: str = "") -> Check:
        return self.add(name, residual < tol, residual, detail)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def violations(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "violations": [c.name for c in self.violations],
        }
