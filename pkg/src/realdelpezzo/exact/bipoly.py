"""Sparse bivariate polynomials over Q and Sylvester resultants."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .unipoly import UniPoly

Scalar = Union[int, Fraction]
Monomial = tuple[int, int]


class BiPoly:
    """Polynomial in x, y stored as {(i, j): c} for c * x**i * y**j."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        self.terms: dict[Monomial, Fraction] = {}
        if terms:
            for k, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    self.terms[(int(k[0]), int(k[1]))] = c

    @classmethod
    def const(cls, c: Scalar) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> BiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> BiPoly:
        return cls({(0, 1): 1})

    @classmethod
    def from_y_coeffs(cls, coeffs: Sequence[UniPoly]) -> BiPoly:
        """Build sum_j coeffs[j](x) * y**j."""
        terms: dict[Monomial, Fraction] = {}
        for j, cx in enumerate(coeffs):
            for i, c in enumerate(cx.coeffs):
                if c != 0:
                    terms[(i, j)] = c
        return cls(terms)

    @classmethod
    def from_univariate(cls, p: UniPoly, var: str = "x") -> BiPoly:
        if var == "x":
            return cls({(i, 0): c for i, c in enumerate(p.coeffs)})
        return cls({(0, j): c for j, c in enumerate(p.coeffs)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        items = sorted(self.terms.items())
        return "BiPoly({" + ", ".join(f"{k}: {v}" for k, v in items) + "})"

    def deg_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def deg_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def order(self) -> int:
        """Lowest total degree of a monomial (multiplicity at the origin)."""
        if not self.terms:
            raise ValueError("order of the zero polynomial")
        return min(i + j for i, j in self.terms)

    @staticmethod
    def _coerce(other: object) -> BiPoly:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.const(other)
        raise TypeError(f"cannot combine BiPoly with {type(other).__name__}")

    def __add__(self, other: object) -> BiPoly:
        o = self._coerce(other)
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: object) -> BiPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> BiPoly:
        return self._coerce(other) - self

    def __mul__(self, other: object) -> BiPoly:
        o = self._coerce(other)
        out: dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in o.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BiPoly:
        result = BiPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def diff(self, var: str) -> BiPoly:
        if var == "x":
            return BiPoly({(i - 1, j): i * c for (i, j), c in self.terms.items() if i > 0})
        if var == "y":
            return BiPoly({(i, j - 1): j * c for (i, j), c in self.terms.items() if j > 0})
        raise ValueError(f"unknown variable {var!r}")

    def __call__(self, x, y):
        acc = Fraction(0)
        for (i, j), c in self.terms.items():
            acc += c * x ** i * y ** j
        return acc

    def swap(self) -> BiPoly:
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()})

    def y_coeffs(self) -> list[UniPoly]:
        """Coefficients as polynomials in x, indexed by the power of y."""
        dy = self.deg_y()
        rows: list[list[Fraction]] = [[] for _ in range(dy + 1)]
        for (i, j), c in self.terms.items():
            row = rows[j]
            if len(row) <= i:
                row.extend([Fraction(0)] * (i + 1 - len(row)))
            row[i] = c
        return [UniPoly(r) for r in rows]

    def x_coeffs(self) -> list[UniPoly]:
        return self.swap().y_coeffs()

    def at_x(self, x0: Scalar) -> UniPoly:
        """Restriction to the vertical line x = x0, as a polynomial in y."""
        return UniPoly([cx(Fraction(x0)) for cx in self.y_coeffs()])

    def at_y(self, y0: Scalar) -> UniPoly:
        return UniPoly([cy(Fraction(y0)) for cy in self.x_coeffs()])

    def substitute_y(self, num: UniPoly, den: UniPoly) -> tuple[UniPoly, int]:
        """Return (P, k) with P(x) = den**k * self(x, num/den), k = deg_y."""
        coeffs = self.y_coeffs()
        k = len(coeffs) - 1
        acc = UniPoly()
        for j, cx in enumerate(coeffs):
            acc = acc + cx * num ** j * den ** (k - j)
        return acc, max(k, 0)

    def translate(self, x0: Scalar, y0: Scalar) -> BiPoly:
        """self(x + x0, y + y0)."""
        X = BiPoly({(1, 0): 1, (0, 0): x0})
        Y = BiPoly({(0, 1): 1, (0, 0): y0})
        out = BiPoly()
        xp: dict[int, BiPoly] = {0: BiPoly.const(1)}
        yp: dict[int, BiPoly] = {0: BiPoly.const(1)}
        for (i, j), c in self.terms.items():
            for k in range(len(xp), i + 1):
                xp[k] = xp[k - 1] * X
            for k in range(len(yp), j + 1):
                yp[k] = yp[k - 1] * Y
            out = out + xp[i] * yp[j] * c
        return out

    def homogeneous_part(self, d: int) -> BiPoly:
        return BiPoly({k: c for k, c in self.terms.items() if k[0] + k[1] == d})


def _bareiss_det(mat: list[list[UniPoly]]) -> UniPoly:
    n = len(mat)
    if n == 0:
        return UniPoly([1])
    m = [row[:] for row in mat]
    sign = 1
    prev = UniPoly([1])
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if swap is None:
                return UniPoly()
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * piv - m[i][k] * m[k][j]).exact_div(prev)
            m[i][k] = UniPoly()
        prev = piv
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def sylvester_matrix(p: Sequence[UniPoly], q: Sequence[UniPoly]) -> list[list[UniPoly]]:
    """Sylvester matrix of two polynomials given by coefficient lists (low to high)."""
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    zero = UniPoly()
    rows: list[list[UniPoly]] = []
    ph = list(reversed(p))
    qh = list(reversed(q))
    for k in range(n):
        rows.append([zero] * k + ph + [zero] * (size - k - len(ph)))
    for k in range(m):
        rows.append([zero] * k + qh + [zero] * (size - k - len(qh)))
    return rows


def resultant(p: BiPoly, q: BiPoly, var: str = "y") -> UniPoly:
    """Sylvester resultant eliminating var; the result is a polynomial in the other variable."""
    if p.is_zero() or q.is_zero():
        raise ValueError("degenerate resultant input: zero polynomial")
    if var == "x":
        p, q = p.swap(), q.swap()
    elif var != "y":
        raise ValueError(f"unknown variable {var!r}")
    pc, qc = p.y_coeffs(), q.y_coeffs()
    if len(pc) == 1 and len(qc) == 1:
        return UniPoly([1])
    return _bareiss_det(sylvester_matrix(pc, qc))


def univariate_resultant(p: UniPoly, q: UniPoly) -> Fraction:
    if p.is_zero() or q.is_zero():
        raise ValueError("degenerate resultant input: zero polynomial")
    pc = [UniPoly([c]) for c in p.coeffs]
    qc = [UniPoly([c]) for c in q.coeffs]
    return _bareiss_det(sylvester_matrix(pc, qc))[0]


def bipoly_from_terms(items: Iterable[tuple[int, int, Scalar]]) -> BiPoly:
    out: dict[Monomial, Fraction] = {}
    for i, j, c in items:
        out[(i, j)] = out.get((i, j), Fraction(0)) + Fraction(c)
    return BiPoly(out)
