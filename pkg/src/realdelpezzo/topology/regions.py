"""Regions of positivity, local sectors at points of B, boundary cycles."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..fibration.profile import BoundaryCycle, monotonicity_changes
from .cells import CellComplex, Divider, SweepError, euler_doubled

Cell = tuple


@dataclass
class Sector:
    """A maximal run of cells around a root between two consecutive branch arcs."""

    cells: list[Cell]
    # ((arc, end), (arc, end)) bounding the run, None when no arc passes the root
    bounds: tuple[tuple[Cell, str], tuple[tuple, str]] | None
    sign: int
    # bounding arcs on the same side of the fiber: x has a local extremum here
    turn: bool = False


@dataclass
class RootStar:
    divider: int
    index: int
    singular: bool
    sectors: list[Sector]

    def local_components(self, positive_only: bool = True) -> int:
        """Local components of the double cover at this root (one per bounded positive sector,
        two for an unbounded positive neighbourhood)."""
        n = 0
        for sc in self.sectors:
            if sc.sign > 0:
                n += 1 if sc.bounds else 2
        return n


@dataclass
class Region:
    id: int
    gaps: list[Cell]
    segments: list[Cell]
    contains_top: bool
    boundary_arcs: list[Cell] = field(default_factory=list)
    inf_arcs: int = 0
    inf_points: int = 0
    smooth_points: int = 0
    # (divider, root index) -> local components of this region there
    singular_sheets: dict[tuple[int, int], int] = field(default_factory=dict)
    cycles: list[BoundaryCycle] = field(default_factory=list)

    @property
    def chi_open(self) -> int:
        return len(self.gaps) - len(self.segments)

    @property
    def chi_normalized(self) -> int:
        """chi of the normalized double of the region's closure."""
        return (2 * self.chi_open - len(self.boundary_arcs) - self.inf_arcs
                + self.inf_points + self.smooth_points + sum(self.singular_sheets.values()))


@dataclass
class RegionGraph:
    complex: CellComplex
    regions: list[Region]
    stars: dict[tuple[int, int], RootStar]
    region_of: dict[Cell, int]

    @property
    def top(self) -> Region:
        tops = [r for r in self.regions if r.contains_top]
        if len(tops) != 1:
            raise AssertionError("the top region is not unique")
        return tops[0]

    def singular_stars(self) -> list[RootStar]:
        return [s for s in self.stars.values() if s.singular]


def _star(cx: CellComplex, d: Divider, i: int) -> RootStar:
    S = len(cx.slabs)
    sl, sr = cx.slabs[(d.index - 1) % S], cx.slabs[d.index]
    left: list[tuple] = []
    for j in range(sl.n, -1, -1):
        lo, hi = cx.gap_span(sl, j, "R")
        if lo <= i <= hi:
            left.append(("gap", sl.index, j))
        if j >= 1 and d.pi_left[j - 1] == i:
            left.append((("arc", sl.index, j - 1), "R", "left"))
    right: list[tuple] = []
    for j in range(sr.n + 1):
        lo, hi = cx.gap_span(sr, j, "L")
        if lo <= i <= hi:
            right.append(("gap", sr.index, j))
        if j < sr.n and d.pi_right[j] == i:
            right.append((("arc", sr.index, j), "L", "right"))
    ring = [("seg", d.index, i)] + left + [("seg", d.index, i - 1)] + right
    arcs = [p for p, c in enumerate(ring) if len(c) == 3 and isinstance(c[0], tuple)]
    sign_of = {c: sg for c, _, sg in _cell_signs(cx, ring)}
    sectors: list[Sector] = []
    if not arcs:
        sg = {sign_of[c] for c in ring}
        if len(sg) != 1:
            raise SweepError("sign change around a root without branch arcs")
        sectors.append(Sector(ring, None, sg.pop()))
    else:
        n = len(ring)
        for a, b in zip(arcs, arcs[1:] + [arcs[0] + n]):
            run = [ring[p % n] for p in range(a + 1, b)]
            ea, eb = ring[a], ring[b % n]
            sgs = {sign_of[c] for c in run}
            if len(sgs) != 1:
                raise SweepError("sector without a constant sign")
            turn = ea[2] == eb[2]
            sectors.append(Sector(run, ((ea[0], ea[1]), (eb[0], eb[1])), sgs.pop(), turn))
    return RootStar(d.index, i, d.singular[i - 1], sectors)


def _cell_signs(cx: CellComplex, cells):
    for c in cells:
        if len(c) == 3 and isinstance(c[0], tuple):
            continue
        if c[0] == "gap":
            yield c, 2, cx.slabs[c[1]].gap_signs[c[2]]
        else:
            yield c, 1, cx.dividers[c[1]].seg_signs[c[2]]


def positivity_regions(cx: CellComplex) -> RegionGraph:
    parent: dict[Cell, Cell] = {}

    def find(u: Cell) -> Cell:
        parent.setdefault(u, u)
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for s in cx.slabs:
        for j, sg in enumerate(s.gap_signs):
            if sg <= 0:
                continue
            g = ("gap", s.index, j)
            find(g)
            for side in ("L", "R"):
                lo, hi = cx.gap_span(s, j, side)
                d = s.left if side == "L" else s.right
                for i in range(lo, hi):
                    parent[find(("seg", d, i))] = find(g)
    for d in cx.dividers:
        for i, sg in enumerate(d.seg_signs):
            if sg > 0:
                find(("seg", d.index, i))

    roots: dict[Cell, int] = {}
    regions: list[Region] = []
    region_of: dict[Cell, int] = {}
    for c in sorted(parent):
        r = find(c)
        if r not in roots:
            roots[r] = len(regions)
            regions.append(Region(len(regions), [], [], False))
        reg = regions[roots[r]]
        region_of[c] = reg.id
        (reg.gaps if c[0] == "gap" else reg.segments).append(c)
    top_ids = {region_of[("gap", s.index, s.n)] for s in cx.slabs}
    if len(top_ids) != 1:
        raise SweepError("top gaps fall into different regions")
    top = regions[top_ids.pop()]
    top.contains_top = True
    top.inf_arcs = len(cx.slabs)
    top.inf_points = len(cx.dividers)

    for s in cx.slabs:
        for b in range(s.n):
            up = ("gap", s.index, b + 1)
            pos = up if s.gap_signs[b + 1] > 0 else ("gap", s.index, b)
            regions[region_of[pos]].boundary_arcs.append(("arc", s.index, b))

    stars: dict[tuple[int, int], RootStar] = {}
    for d in cx.dividers:
        for i in range(1, d.k + 1):
            st = _star(cx, d, i)
            stars[(d.index, i)] = st
            for sc in st.sectors:
                if sc.sign <= 0:
                    continue
                reg = regions[region_of[sc.cells[0]]]
                if st.singular:
                    key = (d.index, i)
                    reg.singular_sheets[key] = reg.singular_sheets.get(key, 0) + (1 if sc.bounds else 2)
                else:
                    if sc.bounds is None:
                        raise SweepError("smooth root without branch arcs")
                    reg.smooth_points += 1
    rg = RegionGraph(cx, regions, stars, region_of)
    _boundary_cycles(rg)
    return rg


def _boundary_cycles(rg: RegionGraph) -> None:
    cx = rg.complex
    link: dict[tuple[Cell, str], tuple[Cell, str]] = {}
    for st in rg.stars.values():
        for sc in st.sectors:
            if sc.sign > 0 and sc.bounds:
                a, b = sc.bounds
                link[a] = b
                link[b] = a
    seen: set[Cell] = set()
    arc_region = {a: reg.id for reg in rg.regions for a in reg.boundary_arcs}
    for s in cx.slabs:
        for b in range(s.n):
            start = ("arc", s.index, b)
            if start in seen:
                continue
            dirs: list[int] = []
            arc, enter = start, "L"
            while True:
                if arc in seen:
                    raise SweepError("boundary walk revisits an arc")
                seen.add(arc)
                dirs.append(1 if enter == "L" else -1)
                leave = "R" if enter == "L" else "L"
                nxt = link.get((arc, leave))
                if nxt is None:
                    raise SweepError("open boundary chain")
                arc, enter = nxt
                if arc == start:
                    if enter != "L":
                        raise SweepError("boundary cycle closes with reversed orientation")
                    break
            rg.regions[arc_region[start]].cycles.append(BoundaryCycle(tuple(dirs)))
    rg.top.cycles.append(BoundaryCycle((1,) * len(cx.slabs)))


def euler_double_cover(rg: RegionGraph | CellComplex) -> int:
    """e(X'(R)) from the doubled cell count; also checked against the normalized components."""
    cx = rg if isinstance(rg, CellComplex) else rg.complex
    e = euler_doubled(cx)
    if isinstance(rg, RegionGraph):
        pinch = sum(st.local_components() - 1 for st in rg.singular_stars())
        if sum(r.chi_normalized for r in rg.regions) - pinch != e:
            raise AssertionError("normalized components disagree with the doubled cell count")
    return e


def region_monotonicity(rg: RegionGraph) -> list[list[int]]:
    return [[monotonicity_changes(c) for c in reg.cycles] for reg in rg.regions]
