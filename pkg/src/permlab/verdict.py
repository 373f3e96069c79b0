"""Pass/fail records shared by the checkers and the CLI report."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Mismatch:
    """First disagreement found by a checker."""

    index: str
    expected: str
    actual: str

    def to_dict(self) -> dict[str, str]:
        return {"index": self.index, "expected": self.expected, "actual": self.actual}


@dataclass
class Verdict:
    name: str
    passed: bool
    detail: str = ""
    mismatch: Mismatch | None = None
    info: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.name, "pass": self.passed}
        if self.detail:
            out["detail"] = self.detail
        out.update(self.info)
        if self.mismatch is not None:
            out["firstMismatch"] = self.mismatch.to_dict()
        return out

    @classmethod
    def fail(cls, name: str, index: str, expected, actual, **info) -> "Verdict":
        return cls(name, False, mismatch=Mismatch(index, str(expected), str(actual)), info=info)
