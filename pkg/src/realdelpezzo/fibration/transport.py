"""Branch transport over P^1(R) and the cusp-count contradictions it yields.

A layout is a cyclic list of intervals with their fiber cardinalities (1 or 3)
and the critical events between them.  Branches over an interval are indexed
bottom to top.  At a 'low' event the two lowest branches of the three-sheeted
side meet at the critical point and the top branch continues; at a 'high' event
the two highest meet.  A 'pass' event joins equal cardinalities branch by
branch through the critical point.  A component of the resulting graph that
meets every interval exactly once is a closed section of B(R) -> P^1(R).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

DELTA_TOTAL = 12
EVENTS = ("low", "high", "pass")


class MalformedData(ValueError):
    pass


@dataclass(frozen=True)
class BranchTransport:
    cards: tuple[int, ...]
    # events[k] sits between interval k-1 and interval k
    events: tuple[str, ...]

    def __post_init__(self) -> None:
        n = len(self.cards)
        if n == 0 or len(self.events) != n:
            raise MalformedData("need one event per interval")
        for k, ev in enumerate(self.events):
            if ev not in EVENTS:
                raise MalformedData(f"unknown event {ev!r}")
            a, b = self.cards[k - 1], self.cards[k]
            if a not in (1, 3) or b not in (1, 3):
                raise MalformedData("cardinalities must be 1 or 3")
            if (ev == "pass") != (a == b):
                raise MalformedData(f"event {ev} between cardinalities {a} and {b}")

    def components(self) -> list[set[tuple]]:
        parent: dict[tuple, tuple] = {}

        def find(u: tuple) -> tuple:
            parent.setdefault(u, u)
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        def union(u: tuple, v: tuple) -> None:
            parent[find(u)] = find(v)

        n = len(self.cards)
        for k in range(n):
            for b in range(self.cards[k]):
                find(("I", k, b))
        for k, ev in enumerate(self.events):
            left, right = (k - 1) % n, k
            pt = ("P", k)
            find(pt)
            if ev == "pass":
                for b in range(self.cards[k]):
                    union(("I", left, b), ("I", right, b))
                union(("I", left, 0), pt)
                continue
            three, one = (left, right) if self.cards[left] == 3 else (right, left)
            merged, kept = ((0, 1), 2) if ev == "low" else ((1, 2), 0)
            for b in merged:
                union(("I", three, b), pt)
            union(("I", three, kept), ("I", one, 0))
        groups: dict[tuple, set[tuple]] = {}
        for u in list(parent):
            groups.setdefault(find(u), set()).add(u)
        return sorted(groups.values(), key=lambda g: sorted(g))

    def one_sheeted(self, comp: set[tuple]) -> bool:
        per = [0] * len(self.cards)
        for node in comp:
            if node[0] == "I":
                per[node[1]] += 1
        return all(c == 1 for c in per)


@dataclass(frozen=True)
class Infeasible:
    reason: str
    layouts: tuple[tuple[BranchTransport, str], ...] = field(default=(), compare=False)

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class ContradictionNotFound:
    note: str = ""

    def __bool__(self) -> bool:
        return True


def layout_verdict(bt: BranchTransport) -> str | None:
    """Contradiction with B(R) being a single circle, or None."""
    comps = bt.components()
    if len(comps) == 1:
        return None
    if any(bt.one_sheeted(c) for c in comps) and 3 in bt.cards:
        return "highest branch closes into a 1-sheeted component"
    return "B(R) is disconnected"


@dataclass(frozen=True)
class CuspDatum:
    """A real critical point of B -> P^1: mu = 0 for a smooth return, else the A_mu index."""

    mu: int
    vertical: bool = False
    x: Fraction | None = None
    color: str | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.mu, int) or isinstance(self.mu, bool) or self.mu < 0:
            raise MalformedData(f"bad mu {self.mu!r}")
        if self.color not in (None, "black", "white"):
            raise MalformedData(f"bad color {self.color!r}")

    @property
    def delta_multiplicity(self) -> int:
        return self.mu + 1 + (1 if self.vertical else 0)


def _check(points: Sequence[CuspDatum]) -> None:
    if not all(isinstance(p, CuspDatum) for p in points):
        raise MalformedData("expected CuspDatum entries")
    xs = [p.x for p in points if p.x is not None]
    if len(xs) != len(set(xs)):
        raise MalformedData("two critical points share a finite x position")


def _axis_layouts(n: int, first_free: bool) -> list[BranchTransport]:
    """Alternating layouts with n events; events 1.. are on the axis (low).

    Event 0 sits at infinity; when first_free its merging pair is unknown.
    """
    out = []
    for start, ev0 in product((3, 1), ("low", "high") if first_free else ("low",)):
        cards = tuple(start if k % 2 == 0 else 4 - start for k in range(n))
        out.append(BranchTransport(cards, (ev0,) + ("low",) * (n - 1)))
    return out


def _run(layouts: list[BranchTransport], reason: str) -> Infeasible | ContradictionNotFound:
    results = [(bt, layout_verdict(bt)) for bt in layouts]
    open_ = [bt for bt, v in results if v is None]
    if open_:
        return ContradictionNotFound(f"{len(open_)} layout(s) without contradiction")
    return Infeasible(reason, tuple((bt, v) for bt, v in results))


def four_cusp_feasibility(cusps: Sequence[CuspDatum]) -> Infeasible | ContradictionNotFound:
    """Four real cusps on an irreducible trisection.

    Three cusps are put on the axis y = 0 with B(R) above it; a projective
    change of x sends the fourth to infinity.  Every cusp costs 3 of the
    discriminant budget, a vertical one 4.
    """
    _check(cusps)
    if len(cusps) != 4 or any(c.mu != 2 for c in cusps):
        return ContradictionNotFound("the argument needs exactly four real cusps")
    if any(c.vertical for c in cusps):
        return Infeasible("discriminant budget 4·3 vs tangency adds 1 beyond 12")
    assert sum(c.delta_multiplicity for c in cusps) == DELTA_TOTAL
    # no budget left: the four cusps are the only critical values
    return _run(_axis_layouts(4, first_free=True),
                "highest branch closes into a 1-sheeted component")


def two_cusp_a4_feasibility(points: Sequence[CuspDatum]) -> Infeasible | ContradictionNotFound:
    """Two real A2 points and an A4 point, all on the one component of B(R)."""
    _check(points)
    if sorted(p.mu for p in points) != [2, 2, 4]:
        return ContradictionNotFound("the argument needs exactly 2A2 + A4")
    used = sum(p.delta_multiplicity for p in points)
    if used > DELTA_TOTAL:
        return Infeasible(f"discriminant budget {used} exceeds 12")
    n_vertical = sum(p.vertical for p in points)
    if n_vertical == 0:
        # 3 + 3 + 5 = 11 leaves exactly one smooth return, sent to infinity
        return _run(_axis_layouts(4, first_free=True),
                    "single extra critical point, highest-branch closure")
    # one vertical cusp and no budget left: three intervals, cardinality 1 next to it
    layouts = [BranchTransport((1, 3, 1), ("pass", "low", "low"))]
    return _run(layouts, "third interval carries three branches")
