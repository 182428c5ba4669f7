"""Dense univariate polynomials with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class UniPoly:
    """Polynomial stored low degree first; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs = _trim([Fraction(c) for c in coeffs])

    @classmethod
    def const(cls, c: Scalar) -> UniPoly:
        return cls([c])

    @classmethod
    def x(cls) -> UniPoly:
        return cls([0, 1])

    @classmethod
    def monomial(cls, deg: int, c: Scalar = 1) -> UniPoly:
        return cls([0] * deg + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> UniPoly:
        p = cls([1])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    # basic structure

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ")

    # arithmetic

    @staticmethod
    def _coerce(other: object) -> UniPoly:
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other])
        raise TypeError(f"cannot combine UniPoly with {type(other).__name__}")

    def __add__(self, other: object) -> UniPoly:
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly([self[k] + o[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: object) -> UniPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> UniPoly:
        return self._coerce(other) - self

    def __mul__(self, other: object) -> UniPoly:
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> UniPoly:
        if e < 0:
            raise ValueError("negative exponent")
        result = UniPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: Scalar) -> UniPoly:
        c = Fraction(c)
        return UniPoly([c * a for a in self.coeffs])

    def shift_degree(self, k: int) -> UniPoly:
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return UniPoly([0] * k + list(self.coeffs))

    def divmod(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lc()
        if len(rem) - 1 < dq:
            return UniPoly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            t = c / lc
            quot[k - dq] = t
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] -= t * b
        return UniPoly(quot), UniPoly(rem[:dq])

    def __floordiv__(self, other: UniPoly) -> UniPoly:
        return self.divmod(other)[0]

    def __mod__(self, other: UniPoly) -> UniPoly:
        return self.divmod(other)[1]

    def exact_div(self, other: UniPoly) -> UniPoly:
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    # calculus and evaluation

    def derivative(self) -> UniPoly:
        return UniPoly([k * self.coeffs[k] for k in range(1, len(self.coeffs))])

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: UniPoly) -> UniPoly:
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + UniPoly([c])
        return acc

    def reverse(self, n: int | None = None) -> UniPoly:
        """x**n * p(1/x); n defaults to the degree."""
        if n is None:
            n = self.degree
        if self.degree > n:
            raise ValueError("reversal degree below polynomial degree")
        padded = list(self.coeffs) + [Fraction(0)] * (n + 1 - len(self.coeffs))
        return UniPoly(padded[::-1])

    def taylor_shift(self, a: Scalar) -> UniPoly:
        """p(x + a)."""
        return self.compose(UniPoly([a, 1]))

    def valuation(self) -> int:
        """Order of vanishing at 0; raises on the zero polynomial."""
        if not self.coeffs:
            raise ValueError("valuation of zero polynomial")
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        raise AssertionError

    # normalisation

    def monic(self) -> UniPoly:
        if not self.coeffs:
            return self
        return self.scale(1 / self.lc())

    def primitive_integer(self) -> tuple[Fraction, list[int]]:
        """Return (k, ints) with self == k * ints, ints primitive with positive leading term."""
        if not self.coeffs:
            return Fraction(0), []
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), [v // g for v in ints]

    def sign_at(self, x: Scalar) -> int:
        v = self(Fraction(x))
        return (v > 0) - (v < 0)

    def sign_at_infinity(self, direction: int = 1) -> int:
        if not self.coeffs:
            return 0
        s = 1 if self.lc() > 0 else -1
        if direction < 0 and self.degree % 2 == 1:
            s = -s
        return s


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd; gcd(0, 0) is 0."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def ext_gcd(p: UniPoly, q: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """Return (g, s, t) with s*p + t*q == g, g monic."""
    r0, r1 = p, q
    s0, s1 = UniPoly([1]), UniPoly()
    t0, t1 = UniPoly(), UniPoly([1])
    while not r1.is_zero():
        quo, rem = r0.divmod(r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    if r0.is_zero():
        return r0, s0, t0
    k = 1 / r0.lc()
    return r0.scale(k), s0.scale(k), t0.scale(k)


def squarefree_part(p: UniPoly) -> UniPoly:
    if p.degree <= 0:
        return p.monic() if not p.is_zero() else p
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g).monic()


def yun_factors(p: UniPoly) -> list[UniPoly]:
    """Square-free factorisation: p = lc * prod(F[k-1] ** k), each F monic and square-free."""
    if p.is_zero():
        raise ValueError("square-free factorisation of the zero polynomial")
    if p.degree == 0:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    factors: list[UniPoly] = []
    while True:
        g = poly_gcd(b, d)
        factors.append(g)
        b = b.exact_div(g)
        if b.degree <= 0:
            break
        c = d.exact_div(g)
        d = c - b.derivative()
    while factors and factors[-1].degree <= 0:
        factors.pop()
    return factors


def from_ints(coeffs: Sequence[int]) -> UniPoly:
    return UniPoly(coeffs)
