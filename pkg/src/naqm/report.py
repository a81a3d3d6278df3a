"""Structured pass/fail results shared by the identity suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Failure:
    case: str
    expected: Any
    actual: Any


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one enumerated suite.

    ``witnesses`` holds evidence found by search-style suites (counterexamples
    that the suite is *looking for*); ``failures`` holds cases that broke the
    suite.  A report passes iff it has no failures.  For search suites
    (``negative=True``) a missing witness is recorded as a failure.
    """

    suite: str
    total_cases: int
    failures: tuple[Failure, ...] = ()
    witnesses: tuple[Failure, ...] = ()
    notes: tuple[str, ...] = ()
    negative: bool = False

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def slug(self) -> str:
        return self.suite.lower().replace("_", "-")

    def summary_line(self) -> str:
        if self.negative:
            status = "passed" if self.passed else "FAILED"
            return (f"{self.slug}: {status}, {len(self.witnesses)} witnesses "
                    f"in {self.total_cases} cases")
        ok = self.total_cases - len(self.failures)
        line = f"{self.slug}: {ok}/{self.total_cases} passed"
        if not self.passed:
            line += f", {len(self.failures)} FAILED"
        return line

    def to_text(self, max_items: int = 10) -> str:
        lines = [self.summary_line()]
        for f in self.failures[:max_items]:
            lines.append(f"  failure {f.case}: expected {f.expected}, got {f.actual}")
        if len(self.failures) > max_items:
            lines.append(f"  ... {len(self.failures) - max_items} more failures")
        for w in self.witnesses[:max_items]:
            lines.append(f"  witness {w.case}: {w.expected} vs {w.actual}")
        if len(self.witnesses) > max_items:
            lines.append(f"  ... {len(self.witnesses) - max_items} more witnesses")
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)

    def to_record(self) -> dict:
        def item(f: Failure) -> dict:
            return {"case": f.case, "expected": str(f.expected), "actual": str(f.actual)}

        return {
            "name": self.slug,
            "total": self.total_cases,
            "failed": len(self.failures),
            "passed": self.passed,
            "failures": [item(f) for f in self.failures],
            "witnesses": [item(w) for w in self.witnesses],
            "notes": list(self.notes),
        }


@dataclass
class _Collector:
    """Mutable accumulator used while a suite enumerates its cases."""

    suite: str
    negative: bool = False
    total: int = 0
    failures: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def check(self, case: str, expected, actual, ok: bool) -> bool:
        self.total += 1
        if not ok:
            self.failures.append(Failure(case, expected, actual))
        return ok

    def report(self) -> VerificationReport:
        return VerificationReport(self.suite, self.total, tuple(self.failures),
                                  tuple(self.witnesses), tuple(self.notes), self.negative)


def reports_to_json(reports) -> str:
    return json.dumps([r.to_record() for r in reports], indent=2)
