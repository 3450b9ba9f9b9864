"""Pass/fail bookkeeping for theorem checks."""
from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import Any

_RELATIONS = {"<=": operator.le, ">=": operator.ge, "==": operator.eq, "<": operator.lt,
              ">": operator.gt, "in": lambda a, b: a in b, "subset": lambda a, b: set(a) <= set(b)}

MAX_KEPT_FAILURES = 10


def _plain(x: Any) -> Any:
    if isinstance(x, (set, frozenset)):
        return sorted(_plain(v) for v in x)
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if hasattr(x, "item"):  # numpy scalar
        return x.item()
    return x


@dataclass
class TheoremRow:
    theorem_id: str
    context: dict
    lhs: Any
    relation: str
    rhs: Any
    passed: bool

    def to_dict(self) -> dict:
        return {"theorem_id": self.theorem_id, "context": _plain(self.context),
                "lhs": _plain(self.lhs), "relation": self.relation, "rhs": _plain(self.rhs),
                "pass": self.passed}


@dataclass
class Check:
    """Aggregate of all rows checked for one theorem id."""

    theorem_id: str
    checked: int = 0
    failed: int = 0
    failures: list[TheoremRow] = field(default_factory=list)
    notes: dict = field(default_factory=dict)
    skipped: str | None = None

    @property
    def passed(self) -> bool | None:
        if self.skipped is not None:
            return None
        return self.failed == 0

    def to_dict(self) -> dict:
        out = {"id": self.theorem_id, "pass": self.passed, "checked": self.checked,
               "failed": self.failed,
               "witness": self.failures[0].to_dict() if self.failures else None}
        if self.notes:
            out["notes"] = _plain(self.notes)
        if self.skipped is not None:
            out["skipped"] = self.skipped
        return out


class TheoremReport:
    """Ordered collection of checks keyed by theorem id."""

    def __init__(self):
        self.checks: dict[str, Check] = {}

    def check(self, theorem_id: str) -> Check:
        if theorem_id not in self.checks:
            self.checks[theorem_id] = Check(theorem_id)
        return self.checks[theorem_id]

    def add(self, theorem_id: str, context: dict, lhs, relation: str, rhs) -> bool:
        ok = bool(_RELATIONS[relation](lhs, rhs))
        c = self.check(theorem_id)
        c.checked += 1
        if not ok:
            c.failed += 1
            if len(c.failures) < MAX_KEPT_FAILURES:
                c.failures.append(TheoremRow(theorem_id, dict(context), lhs, relation, rhs, False))
        return ok

    def note(self, theorem_id: str, **notes) -> None:
        self.check(theorem_id).notes.update(notes)

    def skip(self, theorem_id: str, reason: str) -> None:
        self.check(theorem_id).skipped = reason

    def merge(self, other: "TheoremReport") -> "TheoremReport":
        for tid, c in other.checks.items():
            mine = self.check(tid)
            mine.checked += c.checked
            mine.failed += c.failed
            room = MAX_KEPT_FAILURES - len(mine.failures)
            mine.failures.extend(c.failures[:max(room, 0)])
            for k, v in c.notes.items():
                if k.startswith("max_") and k in mine.notes:
                    mine.notes[k] = max(mine.notes[k], v)
                else:
                    mine.notes[k] = v
            if c.skipped is not None and mine.checked == 0:
                mine.skipped = c.skipped
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed is not False for c in self.checks.values())

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks.values() if c.passed is False]

    def __getitem__(self, theorem_id: str) -> Check:
        return self.checks[theorem_id]

    def __contains__(self, theorem_id: str) -> bool:
        return theorem_id in self.checks

    def __iter__(self):
        return iter(self.checks.values())

    def to_list(self) -> list[dict]:
        return [c.to_dict() for c in self.checks.values()]
