"""Exact arithmetic in Q(zeta_m) = Q[t]/Phi_m(t)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..exact import UniPoly


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> UniPoly:
    if m < 1:
        raise ValueError("m must be positive")
    p = UniPoly.monomial(m) - 1
    for d in range(1, m):
        if m % d == 0:
            p = p.exact_div(cyclotomic_polynomial(d))
    return p


class CyclotomicField:
    def __init__(self, m: int):
        self.m = m
        self.modulus = cyclotomic_polynomial(m)

    def reduce(self, p: UniPoly) -> UniPoly:
        return p % self.modulus

    def zeta(self, k: int = 1) -> UniPoly:
        """zeta^k for any integer k (negative powers through zeta^m = 1)."""
        return self.reduce(UniPoly.monomial(k % self.m))

    def mul(self, a: UniPoly, b: UniPoly) -> UniPoly:
        return self.reduce(a * b)

    def const(self, c) -> UniPoly:
        return UniPoly([Fraction(c)])

    def conj(self, a: UniPoly) -> UniPoly:
        """Complex conjugation: zeta -> zeta^(-1)."""
        out = UniPoly()
        for k in range(a.degree + 1):
            if a[k]:
                out = out + self.zeta(-k).scale(a[k])
        return self.reduce(out)

    def is_real(self, a: UniPoly) -> bool:
        return self.reduce(a - self.conj(a)).is_zero()

    def is_zero(self, a: UniPoly) -> bool:
        return self.reduce(a).is_zero()

    def equal(self, a: UniPoly, b: UniPoly) -> bool:
        return self.is_zero(a - b)
