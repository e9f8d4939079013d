"""Pass/fail collection shared by the verification suites."""
from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Entry:
    check: str
    params: str
    passed: bool
    detail: str = ""

    def as_dict(self):
        d = {"check": self.check, "params": self.params, "pass": self.passed}
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class Report:
    entries: list[Entry] = field(default_factory=list)

    def add(self, check: str, params: str, passed: bool, detail: str = "") -> bool:
        self.entries.append(Entry(check, params, bool(passed), detail))
        return bool(passed)

    def extend(self, other: Report) -> Report:
        self.entries.extend(other.entries)
        return self

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> list[Entry]:
        return [e for e in self.entries if not e.passed]

    def lines(self, fmt: str = "text") -> list[str]:
        if fmt == "json":
            return [json.dumps(e.as_dict(), sort_keys=True) for e in self.entries]
        out = []
        for e in self.entries:
            line = f"{'PASS' if e.passed else 'FAIL'} {e.check} {e.params}"
            out.append(line + (f" {e.detail}" if e.detail else ""))
        return out
