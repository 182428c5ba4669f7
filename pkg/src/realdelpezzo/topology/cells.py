"""Sweep cell decomposition of the real part of F2 relative to B and the section at infinity.

The base circle P^1(R) is cut at every real critical value and at x = infinity.
Over a slab between two dividers the real branches of B are ordered by y; the
gaps between them, the branch arcs and the arc of the section at infinity are
the cells over the slab.  Over a divider the cells are the point at infinity,
the distinct real roots and the fiber segments between them.  Every cell
carries the sign of f, found by exact evaluation at a rational sample.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..exact import AlgebraicNumber, isolate_real_roots, rational_between, sort_algebraic
from ..plane_model.fibers import CriticalFiberGeometry, fiber_geometry, infinity_geometry
from ..plane_model.trisection import Trisection, chart_swap


class SweepError(ValueError):
    pass


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


@dataclass
class Slab:
    index: int
    left: int
    right: int
    sample: Fraction
    branches: list[AlgebraicNumber]
    gap_signs: list[int]

    @property
    def n(self) -> int:
        return len(self.branches)


@dataclass
class Divider:
    index: int
    x: AlgebraicNumber | None  # None is x = infinity
    roots: list[AlgebraicNumber]
    singular: list[bool]
    seg_signs: list[int]
    geometry: CriticalFiberGeometry | None
    # branch maps of the neighbouring slabs: branch index -> root index (1-based)
    pi_left: list[int] = field(default_factory=list)
    pi_right: list[int] = field(default_factory=list)

    @property
    def k(self) -> int:
        return len(self.roots)

    @property
    def critical(self) -> bool:
        return self.geometry is not None


@dataclass
class CellComplex:
    trisection: Trisection
    slabs: list[Slab]
    dividers: list[Divider]

    def cells(self):
        """Yield (cell id, dimension, sign); sign 0 marks B and the section at infinity."""
        for s in self.slabs:
            for j, sg in enumerate(s.gap_signs):
                yield ("gap", s.index, j), 2, sg
            for b in range(s.n):
                yield ("arc", s.index, b), 1, 0
            yield ("inf_arc", s.index), 1, 0
        for d in self.dividers:
            yield ("inf_pt", d.index), 0, 0
            for i in range(1, d.k + 1):
                yield ("root", d.index, i), 0, 0
            for i, sg in enumerate(d.seg_signs):
                yield ("seg", d.index, i), 1, sg

    def euler_characteristic(self) -> int:
        """chi of the real part of F2 (a torus) from the cell counts."""
        return sum((-1) ** dim for _, dim, _ in self.cells())

    def gap_span(self, slab: Slab, j: int, side: str) -> tuple[int, int]:
        """(lower, upper) root indices bounding gap j at the divider on the given side.

        Index 0 and k + 1 both stand for the point at infinity of that fiber.
        """
        d = self.dividers[slab.left if side == "L" else slab.right]
        pi = d.pi_right if side == "L" else d.pi_left
        lo = 0 if j == 0 else pi[j - 1]
        hi = d.k + 1 if j == slab.n else pi[j]
        return lo, hi


def _branch_map(n: int, d: Divider) -> list[int]:
    k = d.k
    if n == k:
        return list(range(1, k + 1))
    g = d.geometry
    if g is None:
        raise SweepError(f"branch count {n} against {k} roots at a regular fiber")
    if g.triple:
        return [1] * n
    r_idx, s_idx = (1, 2) if g.order_sign > 0 else (2, 1)
    if n == 1:
        return [s_idx]
    if n == 3:
        return [r_idx, r_idx, s_idx] if g.order_sign > 0 else [s_idx, r_idx, r_idx]
    raise SweepError(f"unexpected branch count {n}")


def _divider(t: Trisection, index: int, x0: AlgebraicNumber | None) -> Divider:
    if x0 is None:
        other = chart_swap(t)
        g = infinity_geometry(t)
        if g is None:
            roots = sort_algebraic(isolate_real_roots(other.fiber(0)))
            singular = [False] * len(roots)
        else:
            roots, singular = _critical_roots(g)
        seg_signs = []
        for i in range(len(roots) + 1):
            y = rational_between(roots[i - 1] if i else None, roots[i] if i < len(roots) else None)
            seg_signs.append(_sign(other.fiber(0)(y)))
        return Divider(index, None, roots, singular, seg_signs, g)
    g = fiber_geometry(t, x0)
    roots, singular = _critical_roots(g)
    f = t.poly
    seg_signs = []
    for i in range(len(roots) + 1):
        y = rational_between(roots[i - 1] if i else None, roots[i] if i < len(roots) else None)
        seg_signs.append(x0.sign_of(f.at_y(y)))
    return Divider(index, x0, roots, singular, seg_signs, g)


def _critical_roots(g: CriticalFiberGeometry) -> tuple[list[AlgebraicNumber], list[bool]]:
    r = g.repeated_root_y()
    if g.triple:
        return [r], [g.singular]
    s = g.simple_root_y()
    if g.order_sign > 0:
        return [r, s], [g.singular, False]
    return [s, r], [False, g.singular]


def _slab(t: Trisection, index: int, left: int, right: int, sample: Fraction) -> Slab:
    fib = t.fiber(sample)
    branches = sort_algebraic(isolate_real_roots(fib))
    signs = []
    for j in range(len(branches) + 1):
        y = rational_between(branches[j - 1] if j else None, branches[j] if j < len(branches) else None)
        signs.append(_sign(fib(y)))
    return Slab(index, left, right, sample, branches, signs)


def sweep_decompose(t: Trisection, sign: int = 1) -> CellComplex:
    """Cell complex of F2(R) for the cover w^2 = sign * f (sign -1 is handled by reflecting y)."""
    if sign not in (1, -1):
        raise ValueError("cover sign must be +1 or -1")
    if sign < 0:
        t = t.reflect()
    delta = t.discriminant()
    if delta.is_zero():
        raise SweepError("trisection is not reduced")
    crit = sort_algebraic(isolate_real_roots(delta))
    xs: list[AlgebraicNumber | None] = list(crit) + [None]
    S = len(xs)
    dividers = []
    for i, x0 in enumerate(xs):
        try:
            dividers.append(_divider(t, i, x0))
        except (ValueError, AssertionError) as exc:
            where = "infinity" if x0 is None else f"x ~ {float(x0):.6g}"
            raise SweepError(f"cannot resolve the critical fiber at {where}: {exc}") from exc
    slabs = []
    for j in range(S):
        lo, hi = xs[j], xs[(j + 1) % S]
        if S == 1:
            sample = Fraction(0)
        else:
            sample = rational_between(lo, hi)
        slabs.append(_slab(t, j, j, (j + 1) % S, sample))
    for d in dividers:
        d.pi_left = _branch_map(slabs[(d.index - 1) % S].n, d)
        d.pi_right = _branch_map(slabs[d.index].n, d)
    cx = CellComplex(t, slabs, dividers)
    _check_signs(cx)
    return cx


def _check_signs(cx: CellComplex) -> None:
    for s in cx.slabs:
        if s.gap_signs[-1] != 1:
            raise SweepError("top gap is not positive")
        for j, sg in enumerate(s.gap_signs):
            if sg == 0:
                raise SweepError("zero sign on a 2-cell")
            for side in ("L", "R"):
                lo, hi = cx.gap_span(s, j, side)
                d = cx.dividers[s.left if side == "L" else s.right]
                for i in range(lo, hi):
                    if d.seg_signs[i] != sg:
                        raise SweepError(f"sign mismatch between gap {j} of slab {s.index} and its fiber side")
    if cx.euler_characteristic() != 0:
        raise SweepError("cell counts do not add up to a torus")


def euler_doubled(cx: CellComplex) -> int:
    """e of the double cover branched along B and the section at infinity: weights 2 / 1 / 0."""
    total = 0
    for _, dim, sg in cx.cells():
        w = 2 if sg > 0 else (1 if sg == 0 else 0)
        total += (-1) ** dim * w
    return total
