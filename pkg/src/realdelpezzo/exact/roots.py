"""Sturm sequences, real root isolation and real algebraic numbers."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, total_ordering
from math import floor
from typing import Sequence, Union

from .unipoly import UniPoly, poly_gcd, squarefree_part, yun_factors

Scalar = Union[int, Fraction]


def sturm_sequence(p: UniPoly) -> tuple[UniPoly, ...]:
    """Canonical Sturm chain p, p', -rem(...), ... of the square-free part of p."""
    if p.is_zero():
        raise ValueError("Sturm sequence of the zero polynomial")
    return _sturm_chain(p)


@lru_cache(maxsize=2048)
def _sturm_chain(p: UniPoly) -> tuple[UniPoly, ...]:
    p = squarefree_part(p)
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return tuple(seq)


def _right_sign(q: UniPoly, t: Fraction) -> int:
    """Sign of q just to the right of t."""
    d = q
    while not d.is_zero():
        v = d(t)
        if v != 0:
            return 1 if v > 0 else -1
        d = d.derivative()
    return 0


def _variations(signs: list[int]) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _variations_at(seq: Sequence[UniPoly], t: Fraction | None, direction: int) -> int:
    if t is None:
        return _variations([q.sign_at_infinity(direction) for q in seq])
    return _variations([_right_sign(q, t) for q in seq])


def count_roots(p: UniPoly, lo: Scalar | None = None, hi: Scalar | None = None,
                seq: Sequence[UniPoly] | None = None) -> int:
    """Number of distinct real roots in (lo, hi]; None stands for -inf / +inf."""
    if p.is_zero():
        raise ValueError("root count of the zero polynomial")
    if lo is not None and hi is not None and Fraction(lo) >= Fraction(hi):
        return 0
    if seq is None:
        seq = sturm_sequence(p)
    vlo = _variations_at(seq, None if lo is None else Fraction(lo), -1)
    vhi = _variations_at(seq, None if hi is None else Fraction(hi), 1)
    return vlo - vhi


def count_open(p: UniPoly, lo: Fraction, hi: Fraction, seq: Sequence[UniPoly] | None = None) -> int:
    n = count_roots(p, lo, hi, seq)
    if p(hi) == 0:
        n -= 1
    return n


def cauchy_bound(p: UniPoly) -> Fraction:
    lc = abs(p.lc())
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))


@total_ordering
class AlgebraicNumber:
    """A real algebraic number.

    Either an exact rational, or the unique root of a square-free polynomial in
    an open interval whose endpoints are not roots.  Irrational instances are
    certified irrational at construction.
    """

    __slots__ = ("poly", "lo", "hi", "_value", "_seq")

    def __init__(self, poly: UniPoly, lo: Scalar, hi: Scalar, *, _checked: bool = False):
        self.poly = squarefree_part(poly)
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self._value: Fraction | None = None
        self._seq = None
        if not _checked:
            self._seq = sturm_sequence(self.poly)
            if self.lo >= self.hi:
                raise ValueError("empty isolating interval")
            if self.poly(self.lo) == 0 or self.poly(self.hi) == 0:
                raise ValueError("isolating interval endpoint is a root")
            if count_open(self.poly, self.lo, self.hi, self._seq) != 1:
                raise ValueError("interval does not isolate exactly one root")
        self._detect_rational()

    @classmethod
    def rational(cls, value: Scalar) -> AlgebraicNumber:
        obj = cls.__new__(cls)
        v = Fraction(value)
        obj.poly = UniPoly([-v, 1])
        obj.lo = obj.hi = v
        obj._value = v
        obj._seq = None
        return obj

    def _detect_rational(self) -> None:
        if self.poly.degree == 1:
            self._set_rational(-self.poly[0] / self.poly[1])
            return
        _, ints = self.poly.primitive_integer()
        lead = ints[-1]
        while (self.hi - self.lo) * lead >= 1:
            self._bisect()
            if self._value is not None:
                return
        k = floor(self.lo * lead) + 1
        cand = Fraction(k, lead)
        if self.lo < cand < self.hi and self.poly(cand) == 0:
            self._set_rational(cand)

    def _set_rational(self, v: Fraction) -> None:
        self._value = v
        self.lo = self.hi = v
        self.poly = UniPoly([-v, 1])
        self._seq = None

    @property
    def is_rational(self) -> bool:
        return self._value is not None

    @property
    def value(self) -> Fraction:
        if self._value is None:
            raise ValueError("algebraic number is irrational")
        return self._value

    def _bisect(self) -> None:
        m = (self.lo + self.hi) / 2
        pm = self.poly(m)
        if pm == 0:
            self._set_rational(m)
            return
        if (self.poly(self.lo) > 0) != (pm > 0):
            self.hi = m
        else:
            self.lo = m

    def refine(self, width: Scalar) -> AlgebraicNumber:
        width = Fraction(width)
        while self._value is None and self.hi - self.lo > width:
            self._bisect()
        return self

    def interval(self) -> tuple[Fraction, Fraction]:
        return self.lo, self.hi

    def __float__(self) -> float:
        if self._value is not None:
            return float(self._value)
        scale = max(abs(self.lo), abs(self.hi), Fraction(1))
        self.refine(scale * Fraction(1, 2 ** 60))
        return float((self.lo + self.hi) / 2)

    def approx(self, width: Scalar = Fraction(1, 2 ** 40)) -> Fraction:
        if self._value is not None:
            return self._value
        self.refine(width)
        return (self.lo + self.hi) / 2

    def sign_of(self, h: UniPoly) -> int:
        """Exact sign of h at this number."""
        if h.is_zero():
            return 0
        if self._value is not None:
            return h.sign_at(self._value)
        g = poly_gcd(h, self.poly)
        if g.degree > 0 and count_open(g, self.lo, self.hi) > 0:
            return 0
        hseq = sturm_sequence(h)
        while h(self.lo) == 0 or count_roots(h, self.lo, self.hi, hseq) > 0:
            self._bisect()
            if self._value is not None:
                return h.sign_at(self._value)
        return h.sign_at(self.lo)

    def sign_of_ratio(self, num: UniPoly, den: UniPoly) -> int:
        sd = self.sign_of(den)
        if sd == 0:
            raise ZeroDivisionError("denominator vanishes at algebraic number")
        return self.sign_of(num) * sd

    def is_root_of(self, h: UniPoly) -> bool:
        return self.sign_of(h) == 0

    def _cmp(self, other: object) -> int:
        if isinstance(other, (int, Fraction)):
            other = AlgebraicNumber.rational(other)
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        a, b = self, other
        if a._value is not None and b._value is not None:
            return (a._value > b._value) - (a._value < b._value)
        if a._value is not None:
            return -b._cmp(a)
        if b._value is not None:
            s = a.sign_of(UniPoly([-b._value, 1]))
            return s
        lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
        if lo < hi:
            g = poly_gcd(a.poly, b.poly)
            if g.degree > 0 and count_open(g, lo, hi) > 0:
                return 0
        while not (a.hi <= b.lo or b.hi <= a.lo):
            if a.hi - a.lo >= b.hi - b.lo:
                a._bisect()
            else:
                b._bisect()
        return -1 if a.hi <= b.lo else 1

    def __eq__(self, other: object) -> bool:
        r = self._cmp(other)
        if r is NotImplemented:
            return NotImplemented
        return r == 0

    def __lt__(self, other: object) -> bool:
        r = self._cmp(other)
        if r is NotImplemented:
            return NotImplemented
        return r < 0

    def __hash__(self) -> int:
        if self._value is not None:
            return hash(self._value)
        return hash("irrational-algebraic")

    def __repr__(self) -> str:
        if self._value is not None:
            return f"AlgebraicNumber({self._value})"
        return f"AlgebraicNumber(root of {self.poly} in ({self.lo}, {self.hi}))"


def isolate_real_roots(p: UniPoly) -> list[AlgebraicNumber]:
    """Distinct real roots of p in increasing order."""
    if p.is_zero():
        raise ValueError("root isolation of the zero polynomial")
    q = squarefree_part(p)
    if q.degree <= 0:
        return []
    seq = sturm_sequence(q)
    bound = cauchy_bound(q) + 1
    out: list[AlgebraicNumber] = []

    def rec(lo: Fraction, hi: Fraction, n: int) -> None:
        if n == 0:
            return
        if n == 1 and q(lo) != 0 and q(hi) != 0:
            out.append(AlgebraicNumber(q, lo, hi, _checked=True))
            return
        m = (lo + hi) / 2
        is_root = q(m) == 0
        left = count_roots(q, lo, m, seq) - (1 if is_root else 0)
        rec(lo, m, left)
        if is_root:
            out.append(AlgebraicNumber.rational(m))
        rec(m, hi, n - left - (1 if is_root else 0))

    rec(-bound, bound, count_roots(q, -bound, bound, seq))
    return out


def real_roots_with_multiplicity(p: UniPoly) -> list[tuple[AlgebraicNumber, int]]:
    out: list[tuple[AlgebraicNumber, int]] = []
    for k, f in enumerate(yun_factors(p), start=1):
        if f.degree > 0:
            out.extend((r, k) for r in isolate_real_roots(f))
    out.sort(key=lambda rm: _SortKey(rm[0]))
    return out


class _SortKey:
    __slots__ = ("a",)

    def __init__(self, a: AlgebraicNumber):
        self.a = a

    def __lt__(self, other: _SortKey) -> bool:
        return self.a < other.a


def sort_algebraic(values: list[AlgebraicNumber]) -> list[AlgebraicNumber]:
    return sorted(values, key=_SortKey)


def root_multiplicity(p: UniPoly, alpha: AlgebraicNumber | Scalar) -> int:
    """Multiplicity of alpha as a root of p (0 when not a root)."""
    if p.is_zero():
        raise ValueError("multiplicity in the zero polynomial")
    if not isinstance(alpha, AlgebraicNumber):
        alpha = AlgebraicNumber.rational(alpha)
    for k, f in enumerate(yun_factors(p), start=1):
        if f.degree > 0 and alpha.sign_of(f) == 0:
            return k
    return 0


def rational_between(a: AlgebraicNumber | None, b: AlgebraicNumber | None) -> Fraction:
    """A simple rational strictly between a < b (None meaning an infinite end)."""
    if a is None and b is None:
        return Fraction(0)
    if a is None:
        assert b is not None
        return floor(b.lo if not b.is_rational else b.value) - 1
    if b is None:
        return floor(a.hi if not a.is_rational else a.value) + 1
    while True:
        ahi = a.value if a.is_rational else a.hi
        blo = b.value if b.is_rational else b.lo
        if ahi < blo:
            return _simplest_between(ahi, blo)
        if a.is_rational and b.is_rational:
            raise ValueError("values are not strictly increasing")
        if not a.is_rational and (b.is_rational or a.hi - a.lo >= b.hi - b.lo):
            a._bisect()
        else:
            b._bisect()


def _simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Smallest-denominator rational in the open interval (lo, hi)."""
    den = 1
    while True:
        k = floor(lo * den) + 1
        cand = Fraction(k, den)
        if cand < hi:
            return cand
        den *= 2
