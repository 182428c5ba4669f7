"""Exact description of the real fibers of a trisection where the cubic has a repeated root.

At a root x0 of the discriminant the cubic y^3 + a y^2 + b y + c has either a
double root r and a simple root s, or a triple root.  Both are rational
functions of x0, so every question below reduces to the sign of a polynomial
at the algebraic number x0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..exact import (
    AlgebraicNumber,
    BiPoly,
    UniPoly,
    depressed_coefficients,
    isolate_real_roots,
    rational_between,
    resultant,
    root_multiplicity,
    sort_algebraic,
    squarefree_part,
    sturm_sequence,
)
from ..exact.roots import count_roots
from .trisection import Trisection, chart_swap


@dataclass(frozen=True)
class RootFormula:
    """The repeated root r and the remaining simple root s as num/den in x."""

    r_num: UniPoly
    r_den: UniPoly
    s_num: UniPoly
    s_den: UniPoly


def repeated_root_formula(t: Trisection) -> tuple[UniPoly, UniPoly, RootFormula]:
    """Return (P, Q, formula) for the depressed cubic t^3 + P t + Q."""
    P, Q = depressed_coefficients(t.a, t.b, t.c)
    # double root -3Q/(2P) - a/3, simple root -a - 2r
    r_num = Q * -9 - t.a * P * 2
    r_den = P * 6
    s_num = -(t.a * r_den) - r_num * 2
    return P, Q, RootFormula(r_num, r_den, s_num, r_den)


@dataclass
class CriticalFiberGeometry:
    """Root pattern of f(x0, y) at a real root x0 of the discriminant."""

    chart: str
    x: AlgebraicNumber
    delta_multiplicity: int
    triple: bool
    # +1 when the double root lies below the simple root, -1 above, 0 for a triple root
    order_sign: int
    singular: bool
    trisection: Trisection

    @property
    def root_multiplicity(self) -> int:
        return 3 if self.triple else 2

    @property
    def milnor_from_delta(self) -> int:
        """mu with delta multiplicity = mu + i - 1; 0 for a smooth point."""
        return self.delta_multiplicity - self.root_multiplicity + 1

    def fiber_euler(self) -> int:
        """chi(real fiber of X') = 2 chi({f >= 0} + inf) - chi({f = 0} + inf)."""
        if self.triple:
            return 0
        return 1 if self.order_sign > 0 else -1

    def distinct_roots(self) -> int:
        return 1 if self.triple else 2

    def repeated_index(self) -> int:
        """Index (0-based, bottom to top) of the repeated root among distinct roots."""
        if self.triple:
            return 0
        return 0 if self.order_sign > 0 else 1

    def segment_signs(self) -> list[int]:
        """Sign of f on the fiber segments between distinct roots, bottom to top."""
        if self.triple:
            return [-1, 1]
        if self.order_sign > 0:
            # (y - r)^2 (y - s), r < s
            return [-1, -1, 1]
        return [-1, 1, 1]

    def repeated_root_y(self) -> AlgebraicNumber:
        return _y_at(self, repeated=True)

    def simple_root_y(self) -> AlgebraicNumber:
        if self.triple:
            raise ValueError("triple root fiber has no simple root")
        return _y_at(self, repeated=False)


def _interval_eval(p: UniPoly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Enclosure of p over [lo, hi] by interval Horner evaluation."""
    acc_lo = acc_hi = Fraction(0)
    for c in reversed(p.coeffs):
        cands = [acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi]
        acc_lo, acc_hi = min(cands) + c, max(cands) + c
    return acc_lo, acc_hi


def _y_at(g: CriticalFiberGeometry, repeated: bool) -> AlgebraicNumber:
    t = g.trisection
    P, Q, rf = repeated_root_formula(t)
    if g.triple:
        num, den = -t.a, UniPoly([3])
    elif repeated:
        num, den = rf.r_num, rf.r_den
    else:
        num, den = rf.s_num, rf.s_den
    x0 = g.x
    if x0.is_rational:
        return AlgebraicNumber.rational(num(x0.value) / den(x0.value))
    # y = num(x0)/den(x0) is a root of res_x(den(x) Y - num(x), m(x)); isolate it inside
    # the interval enclosure of num/den, refining x0 until the enclosure holds one root
    ypoly, seq = _image_polynomial(x0.poly, num, den)
    while True:
        nlo, nhi = _interval_eval(num, x0.lo, x0.hi)
        dlo, dhi = _interval_eval(den, x0.lo, x0.hi)
        if dlo > 0 or dhi < 0:
            qs = [nlo / dlo, nlo / dhi, nhi / dlo, nhi / dhi]
            lo, hi = min(qs), max(qs)
            if lo < hi and ypoly(lo) != 0 and ypoly(hi) != 0 and count_roots(ypoly, lo, hi, seq) == 1:
                return AlgebraicNumber(ypoly, lo, hi, _checked=True)
            if lo == hi:
                return AlgebraicNumber.rational(lo)
        x0.refine((x0.hi - x0.lo) / 4)


@lru_cache(maxsize=256)
def _image_polynomial(m: UniPoly, num: UniPoly, den: UniPoly) -> tuple[UniPoly, tuple[UniPoly, ...]]:
    """Square-free polynomial vanishing at num/den over every root of m, with its Sturm chain."""
    mb = BiPoly.from_univariate(m, "x")
    lin = BiPoly.from_univariate(den, "x") * BiPoly.y() - BiPoly.from_univariate(num, "x")
    ypoly = squarefree_part(resultant(lin, mb, "x"))
    return ypoly, sturm_sequence(ypoly)


def fiber_geometry(t: Trisection, x0: AlgebraicNumber) -> CriticalFiberGeometry:
    """Root pattern at a real root x0 of the discriminant of t."""
    disc = t.discriminant()
    if disc.is_zero():
        raise ValueError("trisection is not reduced")
    m = root_multiplicity(disc, x0)
    if m == 0:
        raise ValueError("x0 is not a root of the discriminant")
    P, Q, rf = repeated_root_formula(t)
    triple = x0.sign_of(P) == 0
    f = t.poly
    fx = f.diff("x")
    if triple:
        hx, _ = fx.substitute_y(-t.a, UniPoly([3]))
        order = 0
    else:
        hx, _ = fx.substitute_y(rf.r_num, rf.r_den)
        # s - r = (s_num - r_num) / den
        order = x0.sign_of_ratio(rf.s_num - rf.r_num, rf.r_den)
        if order == 0:
            raise AssertionError("double and simple roots coincide without a triple root")
    singular = x0.sign_of(hx) == 0
    return CriticalFiberGeometry(t.chart, x0, m, triple, order, singular, t)


def infinity_geometry(t: Trisection) -> CriticalFiberGeometry | None:
    """Geometry of the fiber at x = infinity when it is critical, else None."""
    other = chart_swap(t)
    disc = other.discriminant()
    if disc.is_zero():
        raise ValueError("trisection is not reduced")
    if disc[0] != 0:
        return None
    return fiber_geometry(other, AlgebraicNumber.rational(0))


def delta_multiplicity_at_infinity(t: Trisection) -> int:
    disc = t.discriminant()
    return 12 - disc.degree


def real_critical_values(t: Trisection) -> list[AlgebraicNumber]:
    disc = t.discriminant()
    if disc.is_zero():
        raise ValueError("trisection is not reduced")
    return sort_algebraic(isolate_real_roots(disc))


def sample_between(a: AlgebraicNumber | None, b: AlgebraicNumber | None) -> Fraction:
    return rational_between(a, b)


def fiber_root_count(t: Trisection, x0: Fraction) -> int:
    """Number of distinct real roots of f(x0, y) at a rational x0."""
    return len(isolate_real_roots(t.fiber(x0)))
