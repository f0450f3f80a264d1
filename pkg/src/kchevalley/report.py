from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    """Outcome of a verification sweep; failures carry enough detail to reproduce."""

    name: str
    checked: int = 0
    failures: list[Any] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, detail: Any = None) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(detail)

    def merge(self, other: Report) -> Report:
        self.checked += other.checked
        self.failures.extend(other.failures)
        return self

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checked - len(self.failures)}/{self.checked}"

    def to_json(self) -> dict:
        return {"name": self.name, "checked": self.checked, "passed": self.passed,
                "failures": [repr(f) for f in self.failures]}
