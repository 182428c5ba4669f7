"""The branch curve of the two-cusp example: parametrization, assembled trisection, deformation.

On the line u = 0 of the pencil the rational map (x0^2 : x0 x1 : y2) reads
x = x1/x0 = (v - 2)/v^3 and y = y2/x0^2 = (v + 2)^2/v^4.  The trisection is
the monic cubic in y whose roots over a fixed x are the values y(v) at the
three solutions v of x v^3 - v + 2 = 0.  It is assembled as the
characteristic polynomial of multiplication by y(v) in Q[v]/(x v^3 - v + 2)
at seven sample abscissae, interpolated in x, and confirmed at extra
abscissae and by substituting the parametrization back.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exact import UniPoly, ext_gcd, real_roots_with_multiplicity
from ..plane_model.trisection import Trisection
from .report import CasebookReport

V = UniPoly.x()
X_NUM, X_DEN = V - 2, V ** 3
Y_NUM, Y_DEN = (V + 2) ** 2, V ** 4
# chart around the other section: x' = x0/x1, y' = y2/x1^2
XP_NUM, XP_DEN = V ** 3, V - 2
YP_NUM, YP_DEN = V ** 2 * (V + 2) ** 2, (V - 2) ** 2

# deformation keeping both cusps: x y^2 + x^2 y - 2 x^3 with weight 1/100
DEFORM_EPS = Fraction(1, 100)
DEFORM_A = UniPoly([0, 1])
DEFORM_B = UniPoly([0, 0, 1])
DEFORM_C = UniPoly([0, 0, 0, -2])


def _eval_rational(num: UniPoly, den: UniPoly, v) -> Fraction | None:
    if v is None:  # v = infinity
        if num.degree < den.degree:
            return Fraction(0)
        if num.degree == den.degree:
            return num.lc / den.lc
        return None
    d = den(Fraction(v))
    return None if d == 0 else num(Fraction(v)) / d


def param_point(v) -> tuple[Fraction | None, Fraction | None]:
    return _eval_rational(X_NUM, X_DEN, v), _eval_rational(Y_NUM, Y_DEN, v)


def _mul_matrix(elem: UniPoly, modulus: UniPoly) -> list[list[Fraction]]:
    n = modulus.degree
    cols = [((elem * V ** j) % modulus) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def _charpoly3(m: list[list[Fraction]]) -> tuple[Fraction, Fraction, Fraction]:
    """(a, b, c) with det(Y - M) = Y^3 + a Y^2 + b Y + c."""
    tr = m[0][0] + m[1][1] + m[2][2]
    minors = (m[0][0] * m[1][1] - m[0][1] * m[1][0]
              + m[0][0] * m[2][2] - m[0][2] * m[2][0]
              + m[1][1] * m[2][2] - m[1][2] * m[2][1])
    det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
           - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    return -tr, minors, -det


def fiber_cubic(x0: Fraction) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients of the monic cubic in y over the abscissa x0 (x0 != 0)."""
    x0 = Fraction(x0)
    if x0 == 0:
        raise ValueError("x = 0 is the cusp fiber; the cubic in v degenerates")
    modulus = UniPoly([2, -1, 0, x0])
    g, s, _ = ext_gcd(Y_DEN, modulus)
    if g.degree != 0:
        raise ValueError("v^4 is not invertible modulo the fiber equation")
    inv = s.scale(1 / g[0])
    y_elem = (Y_NUM * inv) % modulus
    return _charpoly3(_mul_matrix(y_elem, modulus))


def _interpolate(xs, ys) -> UniPoly:
    out = UniPoly()
    for i, xi in enumerate(xs):
        term = UniPoly([ys[i]])
        for j, xj in enumerate(xs):
            if j != i:
                term = term * UniPoly([-xj, 1]).scale(Fraction(1) / (xi - xj))
        out = out + term
    return out


ASSEMBLY_NODES = tuple(Fraction(k) for k in (1, -1, 2, -2, 3, -3, 4))
CHECK_NODES = (Fraction(1, 2), Fraction(-5, 7), Fraction(11, 3))


def branch_trisection() -> Trisection:
    """The branch curve B with positivity above it (f > 0 for y large)."""
    rows = [fiber_cubic(x) for x in ASSEMBLY_NODES]
    a, b, c = (_interpolate(ASSEMBLY_NODES, [r[k] for r in rows]) for k in range(3))
    t = Trisection(a, b, c)
    for x in CHECK_NODES:
        if fiber_cubic(x) != (a(x), b(x), c(x)):
            raise AssertionError(f"assembled trisection disagrees at x = {x}")
    return t


def substitute_parametrization(t: Trisection) -> UniPoly:
    """Numerator of f(x(v), y(v)) over the common denominator; zero iff B contains the curve."""
    # f = y^3 + a y^2 + b y + c with x = X_NUM/X_DEN, y = Y_NUM/Y_DEN; clear v^12 from each term
    # coefficient of y^j has degree <= w = 2(3 - j), so p(x) = acc / v^(3w) and y^j = Y_NUM^j / v^(4j)
    total = UniPoly()
    for j, p in enumerate((t.c, t.b, t.a, UniPoly([1]))):
        w = 2 * (3 - j)
        acc = UniPoly()
        for k in range(w + 1):
            acc = acc + X_NUM ** k * X_DEN ** (w - k) * UniPoly([p[k]])
        total = total + acc * Y_NUM ** j * V ** (18 - 3 * w - 4 * j)
    return total


def deformed_trisection(t: Trisection | None = None, eps: Fraction = DEFORM_EPS) -> Trisection:
    """Small real deformation that keeps both cusps and opens the two solitary nodes into ovals."""
    t = t or branch_trisection()
    return Trisection(t.a + DEFORM_A.scale(eps), t.b + DEFORM_B.scale(eps), t.c + DEFORM_C.scale(eps))


def _ord0(num: UniPoly, den: UniPoly) -> int:
    return num.valuation() - den.valuation()


def _at_infinity(num: UniPoly, den: UniPoly) -> tuple[UniPoly, UniPoly]:
    """num/den in the local parameter s = 1/v, as polynomials in s."""
    n = max(num.degree, den.degree)
    return num.reverse(n), den.reverse(n)


def _label(alpha) -> str:
    return str(alpha.value) if alpha.is_rational else repr(alpha)


def ramification_points(num: UniPoly, den: UniPoly) -> tuple[str, ...]:
    """Real points of P^1 where v -> num/den ramifies ('inf' for infinity); num, den coprime."""
    out = set()
    wronskian = num.derivative() * den - num * den.derivative()
    for r, _ in real_roots_with_multiplicity(wronskian):
        if not r.is_root_of(den):
            out.add(_label(r))
    for r, m in real_roots_with_multiplicity(den):
        if m >= 2:
            out.add(_label(r))
    if abs(den.degree - num.degree) >= 2:
        out.add("inf")
    return tuple(sorted(out))


def verify_branch_parametrization() -> CasebookReport:
    r = CasebookReport()
    # y v^4 = (v + 2)^2, a square, so y >= 0 on the whole line
    r.add("branch.y_times_v4", (V + 2) ** 2 * Y_DEN, Y_NUM * V ** 4, "stated")
    zeros = sorted(_real_zeros(Y_NUM)) + (["inf"] if Y_NUM.degree < Y_DEN.degree else [])
    r.add("branch.y_zero_set", ["-2", "inf"], zeros, "stated")
    r.add("branch.point_v_inf", (0, 0), param_point(None), "stated")
    r.add("branch.point_v_-2", (Fraction(1, 2), 0), param_point(-2), "stated")
    r.add("branch.point_v_3", (Fraction(1, 27), Fraction(25, 81)), param_point(3), "stated")
    # local forms at v = infinity with s = 1/v
    xs_n, xs_d = _at_infinity(X_NUM, X_DEN)
    ys_n, ys_d = _at_infinity(Y_NUM, Y_DEN)
    s = UniPoly.x()
    r.add("branch.local_x_at_inf", s ** 2 * (1 - 2 * s) * xs_d, xs_n, "stated")
    r.add("branch.local_y_at_inf", s ** 2 * (2 * s + 1) ** 2 * ys_d, ys_n, "stated")
    # (2, 3) cusp with non-vertical tangent: x, y of order 2, y - x of order 3
    diff_num = ys_n * xs_d - xs_n * ys_d
    r.add("branch.cusp_at_inf.orders", (2, 2, 3),
          (_ord0(xs_n, xs_d), _ord0(ys_n, ys_d), _ord0(diff_num, ys_d * xs_d)), "stated")
    r.add("branch.chart2.x", XP_NUM * X_NUM, XP_DEN * X_DEN, "stated")
    r.add("branch.chart2.y", YP_NUM * Y_DEN * X_NUM ** 2, YP_DEN * Y_NUM * X_DEN ** 2, "stated")
    # vertical cusp at v = 0 in the second chart: ord x' = 3, ord y' = 2
    r.add("branch.cusp_at_v0.orders", (3, 2), (_ord0(XP_NUM, XP_DEN), _ord0(YP_NUM, YP_DEN)), "stated")
    r.add("branch.ramification_of_x", ["0", "3", "inf"], list(ramification_points(X_NUM, X_DEN)), "stated")
    r.add("branch.ramification_of_x'", ["0", "3", "inf"], list(ramification_points(XP_NUM, XP_DEN)), "stated")
    t = branch_trisection()
    r.add("branch.trisection_contains_parametrization", UniPoly(), substitute_parametrization(t), "derived")
    for label, (x, y) in (("(0,0)", (0, 0)), ("(1/2,0)", (Fraction(1, 2), 0)),
                          ("(1/27,25/81)", (Fraction(1, 27), Fraction(25, 81)))):
        r.add(f"branch.trisection_through{label}", 0, t.poly(x, y), "stated")
    return r


def _real_zeros(p: UniPoly) -> list[str]:
    return [_label(r) for r, _ in real_roots_with_multiplicity(p)]
