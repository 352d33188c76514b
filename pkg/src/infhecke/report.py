"""A small pass/fail record shared by the verification harnesses."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    name: str
    checks: dict = field(default_factory=dict)  # check name -> bool
    details: dict = field(default_factory=dict)  # check name -> first failure; other keys are info

    def record(self, check: str, ok: bool, detail: str | None = None) -> None:
        self.checks[check] = self.checks.get(check, True) and bool(ok)
        if not ok and detail is not None and check not in self.details:
            self.details[check] = detail

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": dict(self.checks),
            "details": dict(self.details),
        }

    def lines(self) -> list[str]:
        out = [f"{self.name}: {'PASS' if self.passed else 'FAIL'}"]
        for k, v in self.checks.items():
            line = f"  {k}: {'pass' if v else 'FAIL'}"
            if k in self.details:
                line += f" ({self.details[k]})"
            out.append(line)
        for k, v in self.details.items():
            if k not in self.checks:
                out.append(f"  {k}: {v}")
        return out
