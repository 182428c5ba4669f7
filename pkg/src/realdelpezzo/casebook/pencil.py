"""The pencil of plane cubics through eight real points and the bianticanonical sextic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .mpoly import MPoly
from .report import CasebookReport

U, V, T = (MPoly.var(3, i) for i in range(3))

BASE_POINTS: tuple[tuple[int, int], ...] = (
    (1, 1), (1, -1), (-1, 1), (-1, -1), (2, 2), (-2, 2), (1, 0), (-1, 0),
)
D_POINTS = ((1, 1), (-1, 1), (2, 2), (-2, 2), (1, 0), (-1, 0))
D_PRIME_POINTS = ((1, -1), (-1, -1), (2, 2), (-2, 2), (1, 0), (-1, 0))


@dataclass(frozen=True)
class PencilData:
    x0: MPoly
    x1: MPoly
    y2: MPoly
    D: MPoly
    D_prime: MPoly
    points: tuple[tuple[int, int], ...] = BASE_POINTS


def pencil_data() -> PencilData:
    """The cubics, the sextic and the two conics at delta = 1, epsilon = -1."""
    x0 = (U ** 2 - V ** 2) * V
    x1 = (U ** 2 - T ** 2) * (V - 2 * T)
    y2 = (U ** 2 - V ** 2) * (U ** 2 - T ** 2) * ((2 * T + V) ** 2 - 4 * U ** 2)
    D = -2 * (U ** 2 - T ** 2) + 3 * V * (V - T)
    Dp = -2 * (U ** 2 - T ** 2) + V * (V + T)
    return PencilData(x0, x1, y2, D, Dp)


def _binary_disc(q: MPoly) -> Fraction:
    """Discriminant of a binary quadratic form a v^2 + b v t + c t^2."""
    a = q.terms.get((0, 2, 0), Fraction(0))
    b = q.terms.get((0, 1, 1), Fraction(0))
    c = q.terms.get((0, 0, 2), Fraction(0))
    return b * b - 4 * a * c


def _restrict_u0(p: MPoly) -> MPoly:
    return MPoly(3, {e: c for e, c in p.terms.items() if e[0] == 0})


def verify_pencil() -> CasebookReport:
    d = pencil_data()
    r = CasebookReport()
    for name, p, deg in (("x0", d.x0, 3), ("x1", d.x1, 3), ("y2", d.y2, 6), ("D", d.D, 2), ("D'", d.D_prime, 2)):
        r.add(f"pencil.{name}.homogeneous_degree", deg, p.degree() if p.is_homogeneous() else None, "trivial")
    for u, v in d.points:
        r.add(f"pencil.x0.vanishes({u},{v})", 0, d.x0(u, v, 1), "stated")
        r.add(f"pencil.x1.vanishes({u},{v})", 0, d.x1(u, v, 1), "stated")
        r.add(f"pencil.y2.double({u},{v})", (0, 0, 0, 0), (d.y2(u, v, 1),) + d.y2.gradient(u, v, 1), "derived")
    for u, v in D_POINTS:
        r.add(f"pencil.D.contains({u},{v})", 0, d.D(u, v, 1), "stated")
    for u, v in D_PRIME_POINTS:
        r.add(f"pencil.D'.contains({u},{v})", 0, d.D_prime(u, v, 1), "stated")
    # the ninth base point of the pencil: v = t = 0
    r.add("pencil.base_point.on_both_cubics", (0, 0), (d.x0(1, 0, 0), d.x1(1, 0, 0)), "stated")
    g0, g1 = d.x0.gradient(1, 0, 0), d.x1.gradient(1, 0, 0)
    minors = [g0[i] * g1[j] - g0[j] * g1[i] for i, j in ((0, 1), (0, 2), (1, 2))]
    r.add("pencil.base_point.transversal", True, any(m != 0 for m in minors), "stated")
    r.add("pencil.base_point.y2_nonzero", True, d.y2(1, 0, 0) != 0, "stated")
    for name, q in (("D", d.D), ("D'", d.D_prime)):
        disc = _binary_disc(_restrict_u0(q))
        r.add(f"pencil.{name}.meets_u0_in_conjugate_pair", True, disc < 0, "stated")
    return r
