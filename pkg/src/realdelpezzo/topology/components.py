"""Normalized components of X'(R) built from a swept curve."""

from __future__ import annotations

from dataclasses import dataclass

from ..fibration.kinds import FiberKind, critical_fibers
from ..plane_model.singularities import CurveSingularity, singular_points
from .regions import RegionGraph
from .smoothing import Component, ComponentModel, PointRecord


def _match(rg: RegionGraph, sings: list[CurveSingularity]) -> dict[tuple[int, int], CurveSingularity]:
    t = rg.complex.trisection
    out = {}
    for st in rg.singular_stars():
        d = rg.complex.dividers[st.divider]
        y = d.roots[st.index - 1]
        for s in sings:
            if d.x is None:
                if s.chart != t.chart and s.y == y:
                    out[(st.divider, st.index)] = s
            elif s.chart == t.chart and s.x == d.x and s.y == y:
                out[(st.divider, st.index)] = s
        if (st.divider, st.index) not in out:
            raise AssertionError("singular root without a classified singular point")
    return out


def normalized_components(rg: RegionGraph, sings: list[CurveSingularity] | None = None) -> ComponentModel:
    """One component per region of positivity; points record the component of each local sheet."""
    if sings is None:
        sings = singular_points(rg.complex.trisection)
    match = _match(rg, sings)
    comps = tuple(
        Component(f"M{r.id}", r.chi_normalized, r.contains_top) for r in rg.regions
    )
    points = []
    solitary = []
    for k, st in enumerate(sorted(rg.singular_stars(), key=lambda s: (s.divider, s.index))):
        sing = match[(st.divider, st.index)]
        pid = f"p{k}"
        sheets: list[str] = []
        for sc in st.sectors:
            if sc.sign > 0:
                name = f"M{rg.region_of[sc.cells[0]]}"
                sheets.extend([name] * (1 if sc.bounds else 2))
        if not sheets:
            solitary.append(pid)
            continue
        sign = "+" if sing.sign in ("+", "o") else "-"
        points.append(PointRecord(pid, sing.mu, sign, tuple(sheets)))
    return ComponentModel(comps, tuple(points), tuple(solitary))


@dataclass(frozen=True)
class MInfinityReport:
    component: str
    klein_prediction: bool
    white_returns: int
    note: str


def identify_M_infinity(m: ComponentModel, rg: RegionGraph | None = None) -> MInfinityReport:
    top = m.M_infinity
    if top is None:
        raise ValueError("model has no component over the section at infinity")
    whites = 0
    if rg is not None:
        t = rg.complex.trisection
        # sign is already folded into the swept trisection
        whites = sum(1 for f in critical_fibers(t) if f.kind == FiberKind.WhiteReturn)
    if whites >= 2:
        return MInfinityReport(top.name, False, whites,
                               "two white returns: b1(M_infinity) >= 4, at most one more component, a sphere")
    return MInfinityReport(top.name, True, whites, "Klein bottle predicted")
