"""Named test curves and a seeded generator of random trisections."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .exact import UniPoly
from .plane_model.trisection import Bisection, Section, Trisection, from_sections


@dataclass(frozen=True)
class CorpusCurve:
    name: str
    trisection: Trisection
    sign: int = 1
    note: str = ""


def three_parabolas(alpha: Fraction | int = 2, a: Fraction | int = 1) -> Trisection:
    """y = 0, y = x^2 and y = alpha (x - a)^2: two tacnodes and two nodes."""
    alpha, a = Fraction(alpha), Fraction(a)
    return from_sections([
        Section(UniPoly([0])),
        Section(UniPoly([0, 0, 1])),
        Section(UniPoly([alpha * a * a, -2 * alpha * a, alpha])),
    ])


def _branch():
    from .casebook.branch import branch_trisection, deformed_trisection

    fB = branch_trisection()
    return fB, deformed_trisection(fB)


def named_curves() -> list[CorpusCurve]:
    U = UniPoly
    fB, fZ = _branch()
    out = [
        CorpusCurve("three-parabolas", three_parabolas(), 1, "two tacnodes"),
        CorpusCurve("three-parabolas-wide", three_parabolas(Fraction(1, 3), 2), 1),
        CorpusCurve("three-parabolas-reflected", three_parabolas(), -1),
        CorpusCurve("branch-curve", fB, 1),
        CorpusCurve("branch-curve-Y", fB, -1, "two A2- and two A1"),
        CorpusCurve("deformed-Z", fZ, -1),
        CorpusCurve("deformed-X", fZ, 1, "two A2+ on one component"),
        CorpusCurve("nodes-and-tacnode", from_sections([Section(U([0])), Section(U([-1, 0, 1])), Section(U([5]))]), 1),
        CorpusCurve("nodes-and-tacnode-reflected",
                    from_sections([Section(U([0])), Section(U([-1, 0, 1])), Section(U([5]))]), -1),
        CorpusCurve("three-lines", from_sections([Section(U([0, 1])), Section(U([1, -1])), Section(U([-2, 0, 1]))]), 1),
        CorpusCurve("flexes", Trisection(U([]), U([]), U([0, -12, -1, 15, 0, -3, 1])), 1),
        CorpusCurve("six-flexes", Trisection(U([]), U([]), U.from_roots([-3, -2, -1, 1, 2, 3]).scale(-1)), 1),
        CorpusCurve("tangent-nodes", from_sections([Section(U([0])), Bisection(U([]), U([0, -1, 0, 0, 1]))]), 1),
        CorpusCurve("section-and-oval", from_sections([Section(U([3])), Bisection(U([]), U([-1, 0, 0, 0, 1]))]), 1),
        CorpusCurve("section-through-oval", from_sections([Section(U([0])), Bisection(U([]), U([-16, 0, 0, 0, 1]))]), 1),
        CorpusCurve("section-through-oval-reflected",
                    from_sections([Section(U([0])), Bisection(U([]), U([-16, 0, 0, 0, 1]))]), -1),
        CorpusCurve("smooth-returns", Trisection(U([0, 1]), U([-3, 0, 1]), U([1, -1, 0, 2, 0, 0, -1])), 1),
    ]
    return out


def random_trisection(rng: random.Random, bound: int = 6) -> Trisection:
    """A random reduced trisection, built from sections/bisections or from raw coefficients."""
    U = UniPoly
    while True:
        mode = rng.randrange(3)
        r = lambda: Fraction(rng.randint(-bound, bound))  # noqa: E731
        try:
            if mode == 0:
                t = from_sections([Section(U([r(), r(), r()])) for _ in range(3)])
            elif mode == 1:
                t = from_sections([Section(U([r(), r(), r()])),
                                   Bisection(U([r(), r(), r()]), U([r() for _ in range(5)]))])
            else:
                t = Trisection(U([r() for _ in range(3)]), U([r() for _ in range(5)]), U([r() for _ in range(7)]))
        except ValueError:
            continue
        if t.is_reduced():
            return t


def random_corpus(count: int, seed: int = 7) -> list[CorpusCurve]:
    rng = random.Random(seed)
    return [CorpusCurve(f"random-{seed}-{k}", random_trisection(rng), rng.choice((1, -1))) for k in range(count)]
