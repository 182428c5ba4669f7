"""End-to-end analysis of one double cover w^2 = sign * f over a trisection."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .fibration import critical_fibers, discriminant_profile
from .fibration.kinds import CriticalFiber, euler_of_fibers
from .jsonio import algebraic_to_json
from .plane_model import Configuration, ConfigPoint, Trisection, singular_points
from .plane_model.singularities import CurveSingularity
from .topology import (
    ComponentModel,
    RegionGraph,
    euler_double_cover,
    identify_M_infinity,
    in_P_X,
    normalized_components,
    positivity_regions,
    sweep_decompose,
)


class EulerMismatch(AssertionError):
    """The fibration count and the cell count disagree."""


@dataclass
class CoverAnalysis:
    trisection: Trisection
    sign: int
    delta_total: int
    fibers: list[CriticalFiber]
    singularities: list[CurveSingularity]
    euler_fibration: int
    euler_cells: int
    regions: RegionGraph
    model: ComponentModel
    notes: list[str] = field(default_factory=list)

    @property
    def euler_agrees(self) -> bool:
        return self.euler_fibration == self.euler_cells

    @property
    def euler_blown_up(self) -> int:
        """e of the real part of X' (X blown up at one real point)."""
        return self.euler_cells

    @property
    def euler_del_pezzo(self) -> int:
        return self.euler_cells + 1

    def configuration(self) -> Configuration:
        """Non-solitary singular points with their separation flag."""
        pts = []
        for p in self.model.points:
            pts.append(ConfigPoint(p.mu, p.sign, p.separating))
        return Configuration(tuple(pts))

    def filtered_configuration(self) -> Configuration:
        return Configuration(tuple(ConfigPoint(p.mu, p.sign, p.separating)
                                   for p in self.model.points if in_P_X(p)))

    def to_json(self) -> dict[str, Any]:
        top = identify_M_infinity(self.model, self.regions) if self.model.components else None
        return {
            "sign": self.sign,
            "delta_total": self.delta_total,
            "fibration": {
                "fibers": [f.to_json() for f in self.fibers],
                "euler": self.euler_fibration,
            },
            "singular_points": [
                {"chart": s.chart, "x": algebraic_to_json(s.x), "y": algebraic_to_json(s.y),
                 "type": s.name, "mu": s.mu,
                 "vertical_tangent": s.vertical_tangent, "delta_multiplicity": s.delta_multiplicity}
                for s in self.singularities
            ],
            "topology": {
                "euler": self.euler_cells,
                "components": self.model.to_json(),
                "solitary_points": len(self.model.solitary),
                "M_infinity": None if top is None else {
                    "component": top.component, "klein_prediction": top.klein_prediction,
                    "white_returns": top.white_returns},
            },
            "cross_check": {"euler_fibration": self.euler_fibration, "euler_cells": self.euler_cells,
                            "agree": self.euler_agrees},
            "euler_del_pezzo": self.euler_del_pezzo,
            "notes": list(self.notes),
        }


def analyze_cover(t: Trisection, sign: int = 1, strict: bool = False) -> CoverAnalysis:
    """Fibration count and cell count of e(X'(R)) for w^2 = sign * f; they must agree."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    prof = discriminant_profile(t)
    fibers = critical_fibers(t, sign)
    notes = []
    if any(f.kind is None for f in fibers):
        notes.append("fibers outside the nine tabulated kinds; their Euler weight is read off the fiber geometry")
    e_fib = euler_of_fibers(fibers, strict=strict)
    cx = sweep_decompose(t, sign)
    rg = positivity_regions(cx)
    e_cells = euler_double_cover(rg)
    tt = t if sign == 1 else t.reflect()
    sings = singular_points(tt)
    model = normalized_components(rg, sings)
    out = CoverAnalysis(t, sign, prof.total, fibers, sings, e_fib, e_cells, rg, model, notes)
    if not out.euler_agrees:
        raise EulerMismatch(f"fibration gives {e_fib}, cells give {e_cells}")
    return out
