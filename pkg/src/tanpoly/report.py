"""Structured results for the verification suites.

A VerifyReport records how many identities a suite checked and which ones
failed. Reports are plain data; rendering and exit-code policy live in the
cli module. Failure records keep every value as an exact decimal string so
reports can be serialized without any floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping


def failure(**fields: object) -> Mapping[str, str]:
    """Build a failure record, stringifying each value exactly."""
    return {key: str(value) for key, value in fields.items()}


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one verification suite."""

    suite: str
    checked: int
    failures: tuple[Mapping[str, str], ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checked": self.checked,
            "pass": self.passed,
            "failures": [dict(f) for f in self.failures],
            "notes": list(self.notes),
        }

    def summary(self) -> str:
        if self.passed:
            return f"{self.suite}: pass (checked {self.checked})"
        return f"{self.suite}: FAIL (checked {self.checked}, failures {len(self.failures)})"
