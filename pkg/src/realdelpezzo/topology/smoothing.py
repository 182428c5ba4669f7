"""Smoothing calculus on the normalized real part and the topological type constraints.

Betti numbers are mod 2.  A closed connected surface has b1 = 2 - chi, so the
model only tracks chi per component.

========================  ==============================================
choice                    effect on the normalized model
========================  ==============================================
Cut (A1, A3 part)         none: the two sheets are already apart
Cylinder (A1, A3)         chi -= 2 on the union of the two sheets; the
                          sheets merge when they lie on different
                          components, otherwise b1 += 2 (flagged)
PlusSphere (A2)           new sphere component (chi = 2)
CutPlusSphere (A3)        Cut followed by PlusSphere
========================  ==============================================
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from itertools import product
from typing import Iterable


class SmoothingChoice(str, Enum):
    Cut = "Cut"
    Cylinder = "Cylinder"
    PlusSphere = "PlusSphere"
    CutPlusSphere = "CutPlusSphere"


MENU: dict[int, tuple[SmoothingChoice, ...]] = {
    1: (SmoothingChoice.Cut, SmoothingChoice.Cylinder),
    2: (SmoothingChoice.PlusSphere,),
    3: (SmoothingChoice.CutPlusSphere, SmoothingChoice.Cylinder),
}


class IllegalSmoothing(ValueError):
    pass


def smoothing_menu(mu: int, sign: str) -> tuple[SmoothingChoice, ...]:
    if sign != "+" or mu not in MENU:
        return ()
    return MENU[mu]


@dataclass(frozen=True)
class Component:
    name: str
    chi: int
    is_M_infinity: bool = False
    flags: tuple[str, ...] = ()

    @property
    def b1(self) -> int:
        return 2 - self.chi


@dataclass(frozen=True)
class PointRecord:
    """A singular point with the component of each local sheet (two for odd mu, one for even)."""

    id: str
    mu: int
    sign: str
    sheets: tuple[str, ...]

    @property
    def separating(self) -> bool | None:
        if self.mu % 2 == 0:
            return None
        return len(self.sheets) == 2 and self.sheets[0] != self.sheets[1]


@dataclass(frozen=True)
class ComponentModel:
    components: tuple[Component, ...]
    points: tuple[PointRecord, ...] = ()
    solitary: tuple[str, ...] = ()

    def component(self, name: str) -> Component:
        for c in self.components:
            if c.name == name:
                return c
        raise KeyError(name)

    def point(self, pid: str) -> PointRecord:
        for p in self.points:
            if p.id == pid:
                return p
        raise KeyError(pid)

    @property
    def M_infinity(self) -> Component | None:
        tops = [c for c in self.components if c.is_M_infinity]
        return tops[0] if tops else None

    def points_on(self, name: str) -> list[PointRecord]:
        return [p for p in self.points if name in p.sheets]

    def m_invariant(self, name: str) -> int:
        """Preimages on the component of the points kept by the P_X filter."""
        total = 0
        for p in self.points:
            if in_P_X(p):
                total += sum(1 for s in p.sheets if s == name)
        return total

    def euler(self) -> int:
        """e of the (unnormalized) real part: sheets glued back at each point."""
        return (sum(c.chi for c in self.components)
                - sum(len(p.sheets) - 1 for p in self.points) + len(self.solitary))

    def profile(self) -> SmoothedProfile:
        return SmoothedProfile(len(self.components), sum(c.b1 for c in self.components))

    def to_json(self) -> list[dict]:
        out = []
        for c in self.components:
            out.append({
                "name": c.name,
                "chi": c.chi,
                "b0_contrib": 1,
                "is_M_infinity": c.is_M_infinity,
                "m": self.m_invariant(c.name),
                "incident_points": [
                    {"id": p.id, "mu": p.mu, "sign": p.sign, "separating": p.separating}
                    for p in self.points_on(c.name)
                ],
                "flags": list(c.flags),
            })
        return out


def in_P_X(p: PointRecord) -> bool:
    """Drop A^- with mu even and A^- with mu odd that are globally nonseparating."""
    if not p.sheets:
        return False
    if p.sign == "-":
        return p.mu % 2 == 1 and bool(p.separating)
    return True


def is_globally_separating(m: ComponentModel, pid: str) -> bool:
    p = m.point(pid)
    if p.mu % 2 == 0:
        raise ValueError("separation undefined for even mu")
    return bool(p.separating)


def _fresh(m: ComponentModel, stem: str) -> str:
    names = {c.name for c in m.components}
    k = 1
    while f"{stem}{k}" in names:
        k += 1
    return f"{stem}{k}"


def apply_smoothing(m: ComponentModel, pid: str, choice: SmoothingChoice | str) -> ComponentModel:
    choice = SmoothingChoice(choice)
    p = m.point(pid)
    if choice not in smoothing_menu(p.mu, p.sign):
        raise IllegalSmoothing(f"{choice.value} is not a smoothing of A{p.mu}{p.sign}")
    points = tuple(q for q in m.points if q.id != pid)
    comps = list(m.components)
    if choice in (SmoothingChoice.Cut, SmoothingChoice.PlusSphere, SmoothingChoice.CutPlusSphere):
        out = ComponentModel(tuple(comps), points, m.solitary)
        if choice != SmoothingChoice.Cut:
            out = replace(out, components=out.components + (Component(_fresh(out, "S"), 2),))
        return out
    a, b = p.sheets
    ca, cb = m.component(a), m.component(b)
    if a != b:
        merged = Component(a, ca.chi + cb.chi - 2, ca.is_M_infinity or cb.is_M_infinity,
                           ca.flags + cb.flags)
        comps = [merged if c.name == a else c for c in comps if c.name != b]
        points = tuple(replace(q, sheets=tuple(a if s == b else s for s in q.sheets)) for q in points)
    else:
        flagged = replace(ca, chi=ca.chi - 2,
                          flags=ca.flags + (f"cylinder at {pid} on one component",))
        comps = [flagged if c.name == a else c for c in comps]
    return ComponentModel(tuple(comps), points, m.solitary)


@dataclass(frozen=True)
class SmoothedProfile:
    b0: int
    b1: int
    b0_exact: bool = True
    b1_exact: bool = True

    def __post_init__(self) -> None:
        if self.b0 < 1 or self.b1 < 0:
            raise ValueError("b0 >= 1 and b1 >= 0 required")

    def label(self) -> str:
        lo = lambda v, ex: f"{v}" if ex else f">= {v}"  # noqa: E731
        return f"b0 {lo(self.b0, self.b0_exact)}, b1 {lo(self.b1, self.b1_exact)}"


# (b0, b1) of every real part of a smoothed rational elliptic surface X'
ADMISSIBLE_TYPES: frozenset[tuple[int, int]] = frozenset(
    [(p + 1, 2) for p in range(1, 5)]      # K + pS
    + [(2, 4)]                             # K + K and K#K + S
    + [(1, 2 * q) for q in range(1, 6)]    # #q K
)


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    violations: tuple[str, ...]
    matches: tuple[tuple[int, int], ...]

    def __bool__(self) -> bool:
        return self.admissible


def smoothing_admissible(s: SmoothedProfile) -> AdmissibilityReport:
    """Whether some admissible (b0, b1) is compatible with the (possibly bounded) profile."""
    viol = []
    if s.b0 > 5:
        viol.append("b0 <= 5")
    if s.b0 >= 3 and (s.b1 > 2 or (s.b1_exact and s.b1 != 2)):
        viol.append("b0 >= 3 forces b1 = 2")
    if s.b0 >= 2 and s.b1 > 4:
        viol.append("b0 >= 2 forces b1 <= 4")
    matches = tuple(sorted(
        (b0, b1) for b0, b1 in ADMISSIBLE_TYPES
        if (b0 == s.b0 if s.b0_exact else b0 >= s.b0)
        and (b1 == s.b1 if s.b1_exact else b1 >= s.b1)
    ))
    if not matches and not viol:
        viol.append("not in the list of real smooth types")
    return AdmissibilityReport(bool(matches), tuple(viol), matches)


def apply_all(m: ComponentModel, choices: Iterable[tuple[str, SmoothingChoice | str]]) -> ComponentModel:
    for pid, ch in choices:
        m = apply_smoothing(m, pid, ch)
    return m


def surjections(items: int, c: int):
    """All maps {0..items-1} -> {1..c} hitting every target."""
    for assign in product(range(1, c + 1), repeat=items):
        if len(set(assign)) == c:
            yield assign
