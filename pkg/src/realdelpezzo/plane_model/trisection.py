"""Trisections of the Hirzebruch surface F2 in the affine chart y^3 + a y^2 + b y + c."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import Any, Iterable, Sequence

from ..exact import (
    BiPoly,
    RationalFormatError,
    UniPoly,
    cubic_discriminant,
    format_rat,
    isolate_real_roots,
    parse_rat,
    yun_factors,
)

MAX_DEG = {"a": 2, "b": 4, "c": 6}
CHARTS = ("U", "infinity")


class InvalidTrisection(ValueError):
    """Coefficient degrees out of range or malformed input."""


class NotATrisection(ValueError):
    """A product of sections and bisections that is not a trisection."""


@dataclass(frozen=True)
class Trisection:
    """B = {y^3 + a(x) y^2 + b(x) y + c(x) = 0} in one chart of F2.

    The chart tag records which affine chart the coefficients live in; the
    other chart is reached with chart_swap.  Positivity means f > 0, which
    holds for y large.
    """

    a: UniPoly
    b: UniPoly
    c: UniPoly
    chart: str = "U"

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            p = getattr(self, name)
            if not isinstance(p, UniPoly):
                object.__setattr__(self, name, UniPoly(p))
                p = getattr(self, name)
            if p.degree > MAX_DEG[name]:
                raise InvalidTrisection(
                    f"deg {name} = {p.degree} exceeds {MAX_DEG[name]}"
                )
        if self.chart not in CHARTS:
            raise InvalidTrisection(f"unknown chart {self.chart!r}")

    @property
    def poly(self) -> BiPoly:
        return BiPoly.from_y_coeffs([self.c, self.b, self.a, UniPoly([1])])

    def discriminant(self) -> UniPoly:
        return cubic_discriminant(self.a, self.b, self.c)

    def is_reduced(self) -> bool:
        return not self.discriminant().is_zero()

    def fiber(self, x0: Fraction | int) -> UniPoly:
        x0 = Fraction(x0)
        return UniPoly([self.c(x0), self.b(x0), self.a(x0), 1])

    def reflect(self) -> Trisection:
        """-f(x, -y): the monic curve whose positivity region is the negativity region of self mirrored."""
        return Trisection(-self.a, self.b, -self.c, self.chart)

    def scale_x(self, k: Fraction | int) -> Trisection:
        """Substitute x -> k x (k nonzero)."""
        k = Fraction(k)
        sub = UniPoly([0, k])
        return Trisection(self.a.compose(sub), self.b.compose(sub), self.c.compose(sub), self.chart)

    def to_json(self) -> dict[str, Any]:
        return {
            "chart": self.chart,
            "a": [format_rat(v) for v in self.a.coeffs],
            "b": [format_rat(v) for v in self.b.coeffs],
            "c": [format_rat(v) for v in self.c.coeffs],
        }

    def __str__(self) -> str:
        return f"y^3 + ({self.a}) y^2 + ({self.b}) y + ({self.c})  [{self.chart}]"


def _other_chart(tag: str) -> str:
    return "infinity" if tag == "U" else "U"


def chart_swap(t: Trisection) -> Trisection:
    """Coordinates x' = 1/x, y' = y / x^2 on the other chart.

    The new equation is x'^6 f(1/x', y'/x'^2), which keeps the positivity side
    and is an involution.
    """
    return Trisection(t.a.reverse(2), t.b.reverse(4), t.c.reverse(6), _other_chart(t.chart))


@dataclass(frozen=True)
class Section:
    """The curve y = s(x), deg s <= 2."""

    s: UniPoly

    def __post_init__(self) -> None:
        if self.s.degree > 2:
            raise NotATrisection(f"section of degree {self.s.degree} > 2")

    @property
    def y_coeffs(self) -> list[UniPoly]:
        return [-self.s, UniPoly([1])]


@dataclass(frozen=True)
class Bisection:
    """The curve y^2 + p(x) y + q(x) = 0, deg p <= 2, deg q <= 4."""

    p: UniPoly
    q: UniPoly

    def __post_init__(self) -> None:
        if self.p.degree > 2 or self.q.degree > 4:
            raise NotATrisection("bisection coefficient degree out of range")

    @property
    def y_coeffs(self) -> list[UniPoly]:
        return [self.q, self.p, UniPoly([1])]


SectionCurve = Section | Bisection


def _mul_y(p: Sequence[UniPoly], q: Sequence[UniPoly]) -> list[UniPoly]:
    out = [UniPoly() for _ in range(len(p) + len(q) - 1)]
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def from_sections(curves: Sequence[SectionCurve], chart: str = "U") -> Trisection:
    """Multiply sections and bisections into a trisection; the y-degrees must add to 3."""
    if not curves:
        raise NotATrisection("empty product")
    total = sum(1 if isinstance(cv, Section) else 2 for cv in curves)
    if total != 3:
        raise NotATrisection(f"total y-degree {total} != 3")
    coeffs: list[UniPoly] = [UniPoly([1])]
    for cv in curves:
        coeffs = _mul_y(coeffs, cv.y_coeffs)
    c, b, a, lead = coeffs
    assert lead == UniPoly([1])
    try:
        return Trisection(a, b, c, chart)
    except InvalidTrisection as exc:
        raise NotATrisection(str(exc)) from exc


def _rational_roots(p: UniPoly) -> list[Fraction]:
    return [r.value for r in isolate_real_roots(p) if r.is_rational]


def _interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> UniPoly:
    out = UniPoly()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        term = UniPoly([yi])
        for j, xj in enumerate(xs):
            if j != i:
                term = term * UniPoly([-xj, 1]).scale(1 / (xi - xj))
        out = out + term
    return out


def _section_factors(ycoeffs: list[UniPoly]) -> list[UniPoly]:
    """All s(x) with deg s <= 2 such that y - s(x) divides sum ycoeffs[j] y^j."""
    f = BiPoly.from_y_coeffs(ycoeffs)
    xs = [Fraction(k) for k in (0, 1, -1)]
    cands = [_rational_roots(f.at_x(x0)) for x0 in xs]
    found: list[UniPoly] = []
    for ys in product(*cands):
        s = _interpolate(xs, ys)
        if s.degree > 2:
            continue
        val, _ = f.substitute_y(s, UniPoly([1]))
        if val.is_zero() and s not in found:
            found.append(s)
    return found


def _divide_by_section(ycoeffs: list[UniPoly], s: UniPoly) -> list[UniPoly]:
    # synthetic division by (y - s) in Q[x][y]
    n = len(ycoeffs) - 1
    quot = [UniPoly() for _ in range(n)]
    carry = UniPoly()
    for j in range(n, 0, -1):
        carry = ycoeffs[j] + carry * s
        quot[j - 1] = carry
    return quot


def _is_square(p: UniPoly) -> bool:
    """Whether p is the square of a polynomial with rational coefficients."""
    if p.is_zero():
        return True
    if p.degree % 2 or not _is_rational_square(p.lc()):
        return False
    return all(f.degree <= 0 for k, f in enumerate(yun_factors(p), start=1) if k % 2 == 1)


def _is_rational_square(q: Fraction) -> bool:
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def factor_trisection(t: Trisection) -> list[SectionCurve] | None:
    """Decompose B into sections and bisections over Q.

    Returns None when B is irreducible over Q; otherwise the list of
    irreducible factors.
    """
    ycoeffs = [t.c, t.b, t.a, UniPoly([1])]
    sections = _section_factors(ycoeffs)
    if not sections:
        return None
    s0 = sections[0]
    rest = _divide_by_section(ycoeffs, s0)
    q, p, _ = rest
    disc = p * p - q * 4
    if _is_square(disc):
        sub = _section_factors(rest)
        if sub:
            s1 = sub[0]
            s2 = -p - s1
            return [Section(s0), Section(s1), Section(s2)]
    return [Section(s0), Bisection(p, q)]


def parse_poly(values: Iterable[Any], name: str) -> UniPoly:
    try:
        return UniPoly([parse_rat(v) for v in values])
    except (RationalFormatError, TypeError) as exc:
        raise InvalidTrisection(f"bad coefficients for {name}: {exc}") from exc


def trisection_from_json(obj: Any) -> Trisection:
    """Accept {"chart", "a", "b", "c"} or {"sections": [...]}."""
    if not isinstance(obj, dict):
        raise InvalidTrisection("curve must be a JSON object")
    chart = obj.get("chart", "U")
    if "sections" in obj:
        curves: list[SectionCurve] = []
        for item in obj["sections"]:
            kind = item.get("kind")
            if kind == "section":
                curves.append(Section(parse_poly(item["s"], "s")))
            elif kind == "bisection":
                curves.append(Bisection(parse_poly(item["p"], "p"), parse_poly(item["q"], "q")))
            else:
                raise InvalidTrisection(f"unknown section kind {kind!r}")
        return from_sections(curves, chart)
    missing = [k for k in ("a", "b", "c") if k not in obj]
    if missing:
        raise InvalidTrisection(f"missing coefficients {missing}")
    return Trisection(
        parse_poly(obj["a"], "a"), parse_poly(obj["b"], "b"), parse_poly(obj["c"], "c"), chart
    )
