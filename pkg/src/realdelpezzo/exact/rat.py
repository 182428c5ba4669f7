"""Rational numbers and their "p/q" text form."""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rat = Fraction


class RationalFormatError(ValueError):
    pass


def parse_rat(value: Union[str, int, Fraction]) -> Fraction:
    """Parse "p/q" or an integer; floats are rejected so that inputs stay exact."""
    if isinstance(value, bool):
        raise RationalFormatError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise RationalFormatError(f"not an exact rational: {value!r}")
        try:
            r = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise RationalFormatError(f"not an exact rational: {value!r}") from exc
        return r
    raise RationalFormatError(f"not an exact rational: {value!r}")


def format_rat(r: Union[int, Fraction]) -> str:
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"
