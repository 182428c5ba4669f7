"""SVG picture of B(R) in the affine chart with the positivity region shaded.

Presentation only: floats are used for drawing coordinates, nothing here feeds
back into any computed invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import isolate_real_roots, rational_between
from .plane_model import Trisection, real_critical_values, singular_points

WIDTH, HEIGHT, PAD = 640, 480, 24
SHAPES = {1: "node", 2: "cusp", 3: "tacnode"}


@dataclass(frozen=True)
class Window:
    x0: float
    x1: float
    y0: float
    y1: float

    def __post_init__(self) -> None:
        if not (self.x0 < self.x1 and self.y0 < self.y1):
            raise ValueError("window must have x0 < x1 and y0 < y1")


@dataclass
class _Sample:
    x: Fraction
    roots: list[float]
    # sign of f just above each root, and below the lowest one
    signs: list[int]


def _sample(t: Trisection, x: Fraction, sign: int) -> _Sample:
    fib = t.fiber(x)
    roots = isolate_real_roots(fib)
    signs = []
    for k in range(len(roots) + 1):
        y = rational_between(roots[k - 1] if k else None, roots[k] if k < len(roots) else None)
        v = fib(y) * sign
        signs.append((v > 0) - (v < 0))
    return _Sample(x, [float(r) for r in roots], signs)


def _adaptive(t: Trisection, w: Window, sign: int, base: int, depth: int) -> list[_Sample]:
    # small denominators keep the exact root isolation cheap
    x0 = Fraction(w.x0).limit_denominator(64)
    x1 = Fraction(w.x1).limit_denominator(64)
    xs = [x0 + (x1 - x0) * k / base for k in range(base + 1)]
    samples = [_sample(t, x, sign) for x in xs]
    out = [samples[0]]
    for a, b in zip(samples, samples[1:]):
        out.extend(_refine(t, a, b, sign, depth))
    return out


def _refine(t: Trisection, a: _Sample, b: _Sample, sign: int, depth: int) -> list[_Sample]:
    if depth == 0 or len(a.roots) == len(b.roots):
        return [b]
    m = _sample(t, (a.x + b.x) / 2, sign)
    return _refine(t, a, m, sign, depth - 1) + _refine(t, m, b, sign, depth - 1)


def default_window(t: Trisection) -> Window:
    xs = [float(c) for c in real_critical_values(t)] or [0.0]
    lo, hi = round(min(xs) - 1.5, 1), round(max(xs) + 1.5, 1)
    ys: list[float] = []
    for k in range(21):
        x = Fraction(lo).limit_denominator(16) + Fraction(hi - lo).limit_denominator(16) * k / 20
        ys.extend(float(r) for r in isolate_real_roots(t.fiber(x)))
    ylo, yhi = (min(ys), max(ys)) if ys else (-1.0, 1.0)
    margin = max(1.0, 0.1 * (yhi - ylo))
    return Window(lo, hi, ylo - margin, yhi + margin)


def render_svg(t: Trisection, sign: int = 1, window: Window | None = None,
               base: int = 160, depth: int = 6) -> str:
    """Branches of B(R), shaded {sign * f > 0} and circled singular points."""
    w = window or default_window(t)
    samples = _adaptive(t, w, sign, base, depth)

    def px(x: float) -> float:
        return PAD + (x - w.x0) / (w.x1 - w.x0) * (WIDTH - 2 * PAD)

    def py(y: float) -> float:
        return HEIGHT - PAD - (y - w.y0) / (w.y1 - w.y0) * (HEIGHT - 2 * PAD)

    def clip(y: float) -> float:
        return min(max(y, w.y0), w.y1)

    shade, curves = [], []
    for a, b in zip(samples, samples[1:]):
        xa, xb = px(float(a.x)), px(float(b.x))
        edges = [w.y0] + a.roots + [w.y1]
        for k, s in enumerate(a.signs):
            lo, hi = clip(edges[k]), clip(edges[k + 1])
            if s > 0 and hi > lo:
                shade.append(f'<rect x="{xa:.2f}" y="{py(hi):.2f}" width="{xb - xa + 0.3:.2f}" '
                             f'height="{py(lo) - py(hi):.2f}"/>')
        if len(a.roots) == len(b.roots):
            for ya, yb in zip(a.roots, b.roots):
                if w.y0 <= ya <= w.y1 or w.y0 <= yb <= w.y1:
                    curves.append(f'<line x1="{xa:.2f}" y1="{py(clip(ya)):.2f}" '
                                  f'x2="{xb:.2f}" y2="{py(clip(yb)):.2f}"/>')
    marks = []
    for s in singular_points(t):
        if s.chart != t.chart:
            continue
        x, y = float(s.x), float(s.y)
        if w.x0 <= x <= w.x1 and w.y0 <= y <= w.y1:
            marks.append(f'<circle cx="{px(x):.2f}" cy="{py(y):.2f}" r="5" '
                         f'data-shape="{SHAPES.get(s.mu, "singular")}">'
                         f'<title>{s.name}</title></circle>')
    return "\n".join([
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        '<rect width="100%" height="100%" fill="white"/>',
        '<g fill="#9ecae1" stroke="none" class="positive">', *shade, "</g>",
        '<g stroke="black" stroke-width="1.6" class="branches">', *curves, "</g>",
        '<g fill="none" stroke="#d62728" stroke-width="2" class="singular">', *marks, "</g>",
        "</svg>",
    ]) + "\n"
