"""Claim ledger for the explicit constructions; a claim passes only on exact equality."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from ..exact import format_rat

PASS = "pass"
FAIL = "fail"


def render(v: Any) -> Any:
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, (Fraction, int)):
        return format_rat(Fraction(v))
    if isinstance(v, (tuple, list)):
        return [render(x) for x in v]
    if isinstance(v, (set, frozenset)):
        return sorted((render(x) for x in v), key=str)
    return str(v)


@dataclass(frozen=True)
class Claim:
    id: str
    expected: Any
    computed: Any
    source: str = "derived"  # "stated", "derived" or "trivial"

    @property
    def status(self) -> str:
        return PASS if render(self.expected) == render(self.computed) else FAIL

    def to_json(self) -> dict:
        return {"id": self.id, "expected": render(self.expected), "computed": render(self.computed),
                "status": self.status, "source": self.source}


@dataclass
class CasebookReport:
    claims: list[Claim] = field(default_factory=list)

    def add(self, cid: str, expected: Any, computed: Any, source: str = "derived") -> Claim:
        c = Claim(cid, expected, computed, source)
        self.claims.append(c)
        return c

    def extend(self, other: CasebookReport | Iterable[Claim]) -> CasebookReport:
        self.claims.extend(other.claims if isinstance(other, CasebookReport) else other)
        return self

    @property
    def passed(self) -> bool:
        return all(c.status == PASS for c in self.claims)

    def failures(self) -> list[Claim]:
        return [c for c in self.claims if c.status != PASS]

    def get(self, cid: str) -> Claim:
        for c in self.claims:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def sorted(self) -> CasebookReport:
        return CasebookReport(sorted(self.claims, key=lambda c: c.id))

    def to_json(self) -> dict:
        s = self.sorted()
        return {"passed": self.passed, "total": len(s.claims),
                "failed": len(self.failures()), "claims": [c.to_json() for c in s.claims]}

    def summary(self) -> str:
        lines = [f"{c.status.upper():4}  {c.id}" for c in self.sorted().claims]
        lines.append(f"{len(self.claims) - len(self.failures())}/{len(self.claims)} claims pass")
        return "\n".join(lines)
