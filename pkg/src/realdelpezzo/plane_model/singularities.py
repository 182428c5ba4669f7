"""Real singular points of a trisection and their A_mu^+/- types.

The Milnor number comes from the discriminant: at a critical fiber with one
singular point, mult_x0(Delta) = mu + i - 1 where i is the contact order of
the vertical line.  At rational points it is cross-checked against the
intersection multiplicity of the two partial derivatives.

Sign tags (type of w^2 = f at the point):

=====================  ===================================  ======
local 2-jet of f        real branches                        tag
=====================  ===================================  ======
indefinite (mu = 1)     two                                  "+"
positive definite       none                                 "+"
negative definite       none (solitary real point)           "o"
rank 1, lambda < 0      mu even: one; mu odd: two            "+"
rank 1, lambda < 0      mu odd, none                         "o"
rank 1, lambda > 0      any                                  "-"
=====================  ===================================  ======

Here f ~ lambda * l^2 along the direction transversal to the tangent.  For
mu = 1 both real forms coincide, so indefinite and positive definite nodes
share the "+" tag.  Solitary points carry no two-dimensional real locus.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exact import (
    AlgebraicNumber,
    BiPoly,
    UniPoly,
    isolate_real_roots,
    poly_gcd,
    root_multiplicity,
    squarefree_part,
)
from .fibers import (
    CriticalFiberGeometry,
    fiber_geometry,
    real_critical_values,
    repeated_root_formula,
    fiber_root_count,
    sample_between,
)
from .intersection import milnor_number
from .trisection import Trisection, chart_swap

MU_CAP = 8


class NotDuVal(ValueError):
    pass


class UnsupportedSingularity(ValueError):
    pass


class CrossCheckFailure(AssertionError):
    pass


@dataclass
class CurveSingularity:
    chart: str
    x: AlgebraicNumber
    y: AlgebraicNumber
    mu: int
    sign: str
    vertical_tangent: bool
    real_branches: int
    delta_multiplicity: int
    mu_route: str

    @property
    def name(self) -> str:
        if self.sign == "o":
            return f"A{self.mu}(solitary)"
        if self.mu == 1:
            return "A1"
        return f"A{self.mu}{'+' if self.sign == '+' else '-'}"

    @property
    def is_solitary(self) -> bool:
        return self.sign == "o"


def _subst(F: BiPoly, num: UniPoly, den: UniPoly, k: int) -> UniPoly:
    """den**k * F(x, num/den) for a fixed k >= deg_y F."""
    acc = UniPoly()
    for j, cx in enumerate(F.y_coeffs()):
        acc = acc + cx * num ** j * den ** (k - j)
    return acc


def _hessian_signs(t: Trisection, g: CriticalFiberGeometry) -> tuple[int, int, int, int]:
    """Signs of f_xx, f_xy, f_yy and of the Hessian determinant at the singular point."""
    f = t.poly
    P, Q, rf = repeated_root_formula(t)
    if g.triple:
        num, den = -t.a, UniPoly([3])
    else:
        num, den = rf.r_num, rf.r_den
    k = 3
    fxx = _subst(f.diff("x").diff("x"), num, den, k)
    fxy = _subst(f.diff("x").diff("y"), num, den, k)
    fyy = _subst(f.diff("y").diff("y"), num, den, k)
    x0 = g.x
    det = fxx * fyy - fxy * fxy
    sden = x0.sign_of(den)
    # den**k has the sign of den when k is odd; det carries den**(2k) > 0
    s = 1 if k % 2 == 0 else sden
    return x0.sign_of(fxx) * s, x0.sign_of(fxy) * s, x0.sign_of(fyy) * s, x0.sign_of(det)


def _neighbour_counts(t: Trisection, x0: AlgebraicNumber) -> tuple[int, int]:
    crit = real_critical_values(t)
    idx = next(i for i, c in enumerate(crit) if c == x0)
    left = crit[idx - 1] if idx > 0 else None
    right = crit[idx + 1] if idx + 1 < len(crit) else None
    xl = sample_between(left, x0)
    xr = sample_between(x0, right)
    return fiber_root_count(t, xl), fiber_root_count(t, xr)


def singularity_at_fiber(t: Trisection, g: CriticalFiberGeometry, cross_check: bool = True) -> CurveSingularity:
    """Classify the singular point on a critical fiber of t (in t's own chart)."""
    if not g.singular:
        raise ValueError("critical fiber carries no singular point")
    sxx, sxy, syy, sdet = _hessian_signs(t, g)
    if sxx == 0 and sxy == 0 and syy == 0:
        mu_guess = g.delta_multiplicity - 2
        if mu_guess <= MU_CAP:
            raise UnsupportedSingularity("triple point of type D/E, outside the A_mu scope")
        raise NotDuVal("triple point with an infinitely near triple point: not Du Val")
    mu = g.milnor_from_delta
    if mu < 1:
        raise AssertionError("singular point with nonpositive Milnor number")
    if mu > MU_CAP:
        raise UnsupportedSingularity(f"A_{mu} exceeds the supported cap mu <= {MU_CAP}")
    y0 = g.repeated_root_y()
    route = "discriminant"
    if cross_check and g.x.is_rational and y0.is_rational:
        mu2 = milnor_number(t.poly, g.x.value, y0.value)
        if mu2 != mu:
            raise CrossCheckFailure(
                f"Milnor number mismatch at ({g.x.value}, {y0.value}): {mu} vs {mu2}"
            )
        route = "discriminant+intersection"
    if mu == 1:
        if sdet < 0:
            sign, branches = "+", 2
        elif sdet > 0:
            sign, branches = ("+", 0) if sxx > 0 else ("o", 0)
        else:
            raise CrossCheckFailure("A1 point with degenerate Hessian")
        return CurveSingularity(t.chart, g.x, y0, mu, sign, g.triple, branches,
                                g.delta_multiplicity, route)
    if sdet != 0:
        raise CrossCheckFailure(f"A_{mu} point with nondegenerate Hessian")
    if g.triple:
        lam = sxx
        if mu % 2 == 1:
            raise UnsupportedSingularity("odd A_mu with vertical tangent")
    else:
        lam = syy
    if mu % 2 == 0:
        branches = 1
        sign = "+" if lam < 0 else "-"
    else:
        nl, nr = _neighbour_counts(t, g.x)
        branches = (nl - 1 + nr - 1) // 2
        if lam > 0:
            sign = "-"
        else:
            sign = "+" if branches else "o"
    return CurveSingularity(t.chart, g.x, y0, mu, sign, g.triple, branches,
                            g.delta_multiplicity, route)


def singular_points(t: Trisection, cross_check: bool = True) -> list[CurveSingularity]:
    """Real singular points of B in both charts, affine ones first in increasing x."""
    out: list[CurveSingularity] = []
    for x0 in real_critical_values(t):
        g = fiber_geometry(t, x0)
        if g.singular:
            out.append(singularity_at_fiber(t, g, cross_check))
    other = chart_swap(t)
    if other.discriminant()[0] == 0:
        g = fiber_geometry(other, AlgebraicNumber.rational(0))
        if g.singular:
            out.append(singularity_at_fiber(other, g, cross_check))
    return out


def classify_singularity(t: Trisection, x: Fraction | AlgebraicNumber,
                         y: Fraction | AlgebraicNumber, chart: str | None = None) -> CurveSingularity:
    """Type of the point (x, y) given in the chart of t (or in the other chart)."""
    if chart is not None and chart != t.chart:
        t = chart_swap(t)
    xa = x if isinstance(x, AlgebraicNumber) else AlgebraicNumber.rational(x)
    if t.discriminant().is_zero():
        raise ValueError("trisection is not reduced")
    if root_multiplicity(t.discriminant(), xa) == 0:
        raise ValueError("point is not singular: fiber is not critical")
    g = fiber_geometry(t, xa)
    if not g.singular or g.repeated_root_y() != y:
        raise ValueError("point is not singular")
    return singularity_at_fiber(t, g)


def complex_singular_count(t: Trisection) -> int:
    """Number of non-real singular points of B in the affine chart of t."""
    P, Q, rf = repeated_root_formula(t)
    f = t.poly
    disc = t.discriminant()
    hx = _subst(f.diff("x"), rf.r_num, rf.r_den, 3)
    g_double = squarefree_part(poly_gcd(disc, hx))
    if not P.is_zero():
        # roots of P carry a triple root, which the double-root formula does not describe
        common = poly_gcd(g_double, P)
        if common.degree > 0:
            g_double = g_double.exact_div(common)
    h3 = _subst(f.diff("x"), -t.a, UniPoly([3]), 3)
    g_triple = squarefree_part(poly_gcd(poly_gcd(P, Q), h3))
    count = 0
    for g in (g_double, g_triple):
        if g.degree > 0:
            count += g.degree - len(isolate_real_roots(g))
    return count
