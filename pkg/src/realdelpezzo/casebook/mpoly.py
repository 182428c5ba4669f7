"""Sparse polynomials in a fixed tuple of variables with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping


class MPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Fraction | int] | None = None):
        self.nvars = nvars
        self.terms = {e: Fraction(c) for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def var(cls, nvars: int, i: int) -> MPoly:
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def const(cls, nvars: int, c) -> MPoly:
        return cls(nvars, {(0,) * nvars: c})

    def _lift(self, o) -> MPoly:
        return o if isinstance(o, MPoly) else MPoly.const(self.nvars, o)

    def __add__(self, o) -> MPoly:
        o = self._lift(o)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, o) -> MPoly:
        return self + (-self._lift(o))

    def __rsub__(self, o) -> MPoly:
        return self._lift(o) - self

    def __mul__(self, o) -> MPoly:
        o = self._lift(o)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MPoly:
        out = MPoly.const(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, o) -> bool:
        return isinstance(o, MPoly) and self.terms == o.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def diff(self, i: int) -> MPoly:
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return MPoly(self.nvars, out)

    def __call__(self, *pt) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(pt, e):
                term *= Fraction(v) ** k
            total += term
        return total

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def gradient(self, *pt) -> tuple[Fraction, ...]:
        return tuple(self.diff(i)(*pt) for i in range(self.nvars))
