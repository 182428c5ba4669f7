"""Real critical fibers of the elliptic fibration X' -> P^1 and their Euler contributions."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any

from ..exact import AlgebraicNumber, UniPoly, real_roots_with_multiplicity, sort_algebraic
from ..plane_model.fibers import CriticalFiberGeometry, fiber_geometry, infinity_geometry
from ..plane_model.singularities import (
    NotDuVal,
    UnsupportedSingularity,
    singularity_at_fiber,
)
from ..plane_model.trisection import Trisection, chart_swap

DELTA_TOTAL = 12


class FiberKind(str, Enum):
    BlackReturn = "BlackReturn"
    WhiteReturn = "WhiteReturn"
    Flex = "Flex"
    BlackNode = "BlackNode"
    WhiteNode = "WhiteNode"
    TangentNode = "TangentNode"
    TransversalCusp = "TransversalCusp"
    TangentCusp = "TangentCusp"
    Tacnode = "Tacnode"


# kind -> (discriminant multiplicity, Euler contribution)
KIND_TABLE: dict[FiberKind, tuple[int, int]] = {
    FiberKind.BlackReturn: (1, 1),
    FiberKind.WhiteReturn: (1, -1),
    FiberKind.Flex: (2, 0),
    FiberKind.BlackNode: (2, 1),
    FiberKind.WhiteNode: (2, -1),
    FiberKind.TangentNode: (3, 0),
    FiberKind.TransversalCusp: (3, 1),
    FiberKind.TangentCusp: (4, 0),
    FiberKind.Tacnode: (4, 1),
}


class NonReducedTrisection(ValueError):
    pass


class OutOfTableScope(ValueError):
    pass


@dataclass(frozen=True)
class DiscriminantProfile:
    delta: UniPoly
    real_roots: tuple[tuple[AlgebraicNumber, int], ...]
    infinity_multiplicity: int
    nonreal_multiplicity: int

    @property
    def total(self) -> int:
        return (sum(m for _, m in self.real_roots) + self.infinity_multiplicity
                + self.nonreal_multiplicity)


def discriminant_profile(t: Trisection) -> DiscriminantProfile:
    """Delta with its real roots; the point at infinity is read off the degree defect."""
    delta = t.discriminant()
    if delta.is_zero():
        raise NonReducedTrisection("non-reduced trisection")
    real = tuple(real_roots_with_multiplicity(delta))
    at_inf = DELTA_TOTAL - delta.degree
    other = chart_swap(t).discriminant()
    # the other chart sees the same point with the same multiplicity
    if other.valuation() != at_inf:
        raise AssertionError("discriminant multiplicity at infinity disagrees between charts")
    nonreal = delta.degree - sum(m for _, m in real)
    return DiscriminantProfile(delta, real, at_inf, nonreal)


@dataclass(frozen=True)
class CriticalFiber:
    x: AlgebraicNumber | None  # None is the fiber at x = infinity
    delta_multiplicity: int
    kind: FiberKind | None
    euler: int
    geometry: CriticalFiberGeometry
    singular_type: str | None = None

    @property
    def at_infinity(self) -> bool:
        return self.x is None

    def to_json(self) -> dict[str, Any]:
        from ..jsonio import algebraic_to_json

        return {
            "x": algebraic_to_json(self.x),
            "kind": self.kind.value if self.kind else None,
            "multiplicity": self.delta_multiplicity,
            "euler": self.euler,
            "singular_type": self.singular_type,
        }


def _kind_of(g: CriticalFiberGeometry) -> tuple[FiberKind | None, str | None]:
    """Table kind of the fiber (None when outside the table) and the singular point's name."""
    m = g.delta_multiplicity
    black = g.order_sign > 0
    if not g.singular:
        if not g.triple and m == 1:
            return (FiberKind.BlackReturn if black else FiberKind.WhiteReturn), None
        if g.triple and m == 2:
            return FiberKind.Flex, None
        return None, None
    try:
        sing = singularity_at_fiber(g.trisection, g)
    except (UnsupportedSingularity, NotDuVal):
        return None, "unsupported"
    name = sing.name
    if g.triple:
        if sing.mu == 1 and m == 3:
            return FiberKind.TangentNode, name
        if sing.mu == 2 and m == 4 and sing.sign == "+":
            return FiberKind.TangentCusp, name
        return None, name
    if sing.mu == 1 and m == 2:
        return (FiberKind.BlackNode if black else FiberKind.WhiteNode), name
    if sing.mu == 2 and sing.sign == "+":
        return FiberKind.TransversalCusp, name
    if sing.mu == 3 and sing.sign == "+" and sing.real_branches > 0:
        return FiberKind.Tacnode, name
    return None, name


def _fiber(g: CriticalFiberGeometry, x: AlgebraicNumber | None) -> CriticalFiber:
    kind, sname = _kind_of(g)
    euler = g.fiber_euler()
    if kind is not None and KIND_TABLE[kind] != (g.delta_multiplicity, euler):
        raise AssertionError(f"fiber {kind.value} disagrees with its table row")
    return CriticalFiber(x, g.delta_multiplicity, kind, euler, g, sname)


def classify_critical_fiber(t: Trisection, x0: AlgebraicNumber | None) -> CriticalFiber:
    """Classify the fiber over x0 (None for x = infinity, read in the other chart)."""
    if x0 is None:
        g = infinity_geometry(t)
        if g is None:
            raise ValueError("fiber at infinity is not critical")
    else:
        g = fiber_geometry(t, x0)
    fib = _fiber(g, x0)
    if fib.kind is None:
        where = "infinity" if x0 is None else f"x ~ {float(x0):.6g}"
        raise OutOfTableScope(f"outside the nine tabulated kinds at {where} ({fib.singular_type or 'smooth'})")
    return fib


def critical_fibers(t: Trisection, sign: int = 1) -> list[CriticalFiber]:
    """All real critical fibers of the cover w^2 = sign * f, in increasing x, infinity last.

    Fibers outside the nine table kinds carry kind None and their operational
    Euler contribution.
    """
    if sign not in (1, -1):
        raise ValueError("cover sign must be +1 or -1")
    if sign < 0:
        t = t.reflect()
    prof = discriminant_profile(t)
    out = [_fiber(fiber_geometry(t, x0), x0) for x0, _ in prof.real_roots]
    if prof.infinity_multiplicity:
        out.append(_fiber(infinity_geometry(t), None))
    return out


def euler_from_fibration(t: Trisection, sign: int = 1, strict: bool = True) -> int:
    """e(X'(R)) for X': w^2 = sign * f, summed over the real critical fibers.

    With strict=True a fiber outside the table raises OutOfTableScope.
    """
    return euler_of_fibers(critical_fibers(t, sign), strict)


def euler_of_fibers(fibers: list[CriticalFiber], strict: bool = True) -> int:
    """Sum of the Euler contributions of already classified fibers."""
    total = 0
    for fib in fibers:
        if strict and fib.kind is None:
            where = "infinity" if fib.x is None else f"x ~ {float(fib.x):.6g}"
            raise OutOfTableScope(f"outside the nine tabulated kinds at {where} ({fib.singular_type or 'smooth'})")
        total += fib.euler
    return total


def fibration_report(t: Trisection, sign: int = 1) -> dict[str, Any]:
    fibers = critical_fibers(t, sign)
    prof = discriminant_profile(t)
    return {
        "fibers": [f.to_json() for f in fibers],
        "totals": {
            "delta_total": prof.total,
            "euler": sum(f.euler for f in fibers),
            "out_of_scope": sum(1 for f in fibers if f.kind is None),
        },
    }


def sorted_fiber_values(t: Trisection) -> list[AlgebraicNumber]:
    return sort_algebraic([x for x, _ in discriminant_profile(t).real_roots])
