"""Local intersection multiplicity of plane curves at a rational point (Fulton's algorithm)."""

from __future__ import annotations

from fractions import Fraction

from ..exact import BiPoly, UniPoly

INFINITE = -1


def _x_restriction(F: BiPoly) -> UniPoly:
    return F.at_y(0)


def _divide_by_y(F: BiPoly) -> BiPoly:
    return BiPoly({(i, j - 1): c for (i, j), c in F.terms.items()})


def _at_origin(F: BiPoly, G: BiPoly, budget: int) -> int:
    total = 0
    while True:
        if F.terms.get((0, 0), 0) != 0 or G.terms.get((0, 0), 0) != 0:
            return total
        if budget <= 0:
            raise OverflowError("intersection multiplicity budget exhausted")
        budget -= 1
        fr, gr = _x_restriction(F), _x_restriction(G)
        if fr.is_zero() and gr.is_zero():
            return INFINITE
        if fr.is_zero() or (not gr.is_zero() and gr.degree < fr.degree):
            F, G, fr, gr = G, F, gr, fr
        if gr.is_zero():
            # G = y * H:  I(F, G) = I(F, y) + I(F, H), and I(F, y) = ord_x F(x, 0)
            total += fr.valuation()
            G = _divide_by_y(G)
            continue
        shift = gr.degree - fr.degree
        G = G - F * BiPoly({(shift, 0): gr.lc() / fr.lc()})


def intersection_multiplicity(F: BiPoly, G: BiPoly, x0: Fraction | int = 0,
                              y0: Fraction | int = 0, budget: int = 10_000) -> int:
    """I_p(F, G) at p = (x0, y0); returns INFINITE (-1) for a common component through p."""
    if F.is_zero() or G.is_zero():
        return INFINITE
    F = F.translate(x0, y0)
    G = G.translate(x0, y0)
    return _at_origin(F, G, budget)


def milnor_number(f: BiPoly, x0: Fraction | int, y0: Fraction | int) -> int:
    """mu(f, p) = I_p(f_x, f_y)."""
    return intersection_multiplicity(f.diff("x"), f.diff("y"), x0, y0)
