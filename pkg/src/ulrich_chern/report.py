"""Verification reports: named checks with expected and computed values."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

TAGS = ("PAPER", "TRIVIAL", "DERIVED")


@dataclass
class Check:
    id: str
    expected: Any
    tag: str
    computed: Any
    ok: bool
    note: str = ""

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"provenance tag must be one of {TAGS}, got {self.tag!r}")

    def to_json(self) -> dict:
        out = {"id": self.id, "expected": self.expected, "tag": self.tag, "computed": self.computed, "pass": self.ok}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    def add(self, id: str, expected, computed, ok: bool | None = None, tag: str = "PAPER", note: str = "") -> Check:
        if ok is None:
            ok = expected == computed
        chk = Check(id, expected, tag, computed, bool(ok), note)
        self.checks.append(chk)
        return chk

    def extend(self, other: "VerificationReport", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.id, c.expected, c.tag, c.computed, c.ok, c.note))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {"suite": self.suite, "checks": [c.to_json() for c in self.checks], "pass": self.ok}

    def to_markdown(self) -> str:
        lines = [f"### {self.suite}", "", "| check | expected | computed | tag | pass |", "|---|---|---|---|---|"]
        for c in self.checks:
            lines.append(f"| {c.id} | {_cell(c.expected)} | {_cell(c.computed)} | {c.tag} | {'yes' if c.ok else 'NO'} |")
        lines += ["", f"overall: {'PASS' if self.ok else 'FAIL'}"]
        return "\n".join(lines)


def _cell(v) -> str:
    return str(v).replace("|", "\\|")
