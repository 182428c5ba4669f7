"""Discriminant of a monic cubic with polynomial coefficients."""

from __future__ import annotations

from fractions import Fraction

from .unipoly import UniPoly


def cubic_discriminant(a: UniPoly, b: UniPoly, c: UniPoly) -> UniPoly:
    """Discriminant of y^3 + a y^2 + b y + c.

    Positive values mean three distinct real roots, negative values one real
    root and a conjugate pair, zero a repeated root.
    """
    return (
        a * b * c * 18
        - a ** 3 * c * 4
        + a ** 2 * b ** 2
        - b ** 3 * 4
        - c ** 2 * 27
    )


def depressed_coefficients(a: UniPoly, b: UniPoly, c: UniPoly) -> tuple[UniPoly, UniPoly]:
    """(P, Q) with y = t - a/3 turning the cubic into t^3 + P t + Q."""
    P = b - a ** 2 * Fraction(1, 3)
    Q = a ** 3 * Fraction(2, 27) - a * b * Fraction(1, 3) + c
    return P, Q
