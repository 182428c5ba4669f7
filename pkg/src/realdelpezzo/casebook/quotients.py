"""Cyclic quotient singularities of the plane and their projectivized tangent bundles.

The group mu_m (m = n + 1) acts on the plane through the complex coordinate
z = x + i y by z -> zeta z, and on tangent directions (xi : eta) by
(zeta xi : zeta^-1 eta).  Real tangent directions are those with eta = conj(xi);
on them the action multiplies the ratio xi/eta by zeta^2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from ..exact import BiPoly, UniPoly
from .cyclotomic import CyclotomicField
from .report import CasebookReport

X, Y = BiPoly.x(), BiPoly.y()


def _gaussian_power(k: int) -> tuple[BiPoly, BiPoly]:
    """(Re, Im) of (x + i y)^k by repeated multiplication."""
    re, im = BiPoly.const(1), BiPoly.const(0)
    for _ in range(k):
        re, im = re * X - im * Y, re * Y + im * X
    return re, im


def invariant_generators(n: int) -> tuple[BiPoly, BiPoly, BiPoly]:
    """u = P + conj P, v = (P - conj P)/i, w = x^2 + y^2 with P = (x + i y)^(n + 1)."""
    re, im = _gaussian_power(n + 1)
    return re * 2, im * 2, X * X + Y * Y


def _binomial_real_part(k: int) -> BiPoly:
    """Re (x + i y)^k from the binomial expansion, an independent route."""
    out = BiPoly()
    for j in range(0, k + 1, 2):
        sign = -1 if (j // 2) % 2 else 1
        out = out + (X ** (k - j)) * (Y ** j) * (sign * comb(k, j))
    return out


def verify_invariant_ring(n: int) -> CasebookReport:
    if n < 0 or n % 2 or n > 8:
        raise ValueError("n must be even with 0 <= n <= 8")
    r = CasebookReport()
    u, v, w = invariant_generators(n)
    lhs = u * u + v * v
    rhs = (w ** (n + 1)) * 4
    r.add(f"ptb.n{n}.u2_plus_v2_equals_4w^(n+1)", True, lhs == rhs, "derived")
    r.add(f"ptb.n{n}.degree", 2 * (n + 1), lhs.total_degree(), "trivial")
    r.add(f"ptb.n{n}.u_matches_binomial", True, u == _binomial_real_part(n + 1) * 2, "derived")
    top = (2 * (n + 1), 0)
    wn = w ** (n + 1)
    r.add(f"ptb.n{n}.normalization_constant", 4, lhs.terms.get(top, 0) / wn.terms[top], "derived")
    if n == 2:
        r.add("ptb.n2.u", True, u == (X ** 3 - X * Y * Y * 3) * 2, "derived")
        r.add("ptb.n2.v", True, v == (X * X * Y * 3 - Y ** 3) * 2, "derived")
    if n == 0:
        r.add("ptb.n0.u", True, u == X * 2, "trivial")
        r.add("ptb.n0.v", True, v == Y * 2, "trivial")
    return r


@dataclass(frozen=True)
class ElementAction:
    k: int
    fixes_only_origin: bool
    real_direction_fixed: bool
    trivial_on_directions: bool


def group_action(n: int) -> list[ElementAction]:
    """Fixed-point data of every nontrivial zeta^k, computed in Q(zeta_{n+1})."""
    m = n + 1
    K = CyclotomicField(m)
    out = []
    for k in range(1, m):
        z = K.zeta(k)
        # det(R - I) for the real rotation R by zeta^k equals |zeta^k - 1|^2
        det = K.mul(z - 1, K.conj(z) - 1)
        ratio = K.zeta(2 * k)
        fixes_dir = K.is_zero(ratio - 1)
        # the action on (xi : eta) is scalar iff zeta^k = zeta^-k
        trivial = K.equal(z, K.zeta(-k))
        out.append(ElementAction(k, not K.is_zero(det), fixes_dir, trivial))
    return out


def seifert_multiplicity(n: int) -> int | None:
    """Order of the group acting freely on the real directions over the origin; None if not free."""
    acts = group_action(n)
    if any(a.real_direction_fixed for a in acts):
        return None
    return n + 1


def verify_group_action(n: int) -> CasebookReport:
    if not 1 <= n <= 8:
        raise ValueError("n must lie in 1..8")
    r = CasebookReport()
    acts = group_action(n)
    m = n + 1
    primitive = [a for a in acts if gcd(a.k, m) == 1]
    r.add(f"action.n{n}.only_origin_fixed", True, all(a.fixes_only_origin for a in acts), "derived")
    if n % 2 == 0:
        r.add(f"action.n{n}.no_real_fixed_direction", True,
              not any(a.real_direction_fixed for a in acts), "stated")
        r.add(f"action.n{n}.seifert_multiplicity", m, seifert_multiplicity(n), "stated")
        r.add(f"action.n{n}.primitive_roots", sum(1 for k in range(1, m) if gcd(k, m) == 1),
              len(primitive), "trivial")
    else:
        half = [a for a in acts if a.k == m // 2]
        r.add(f"action.n{n}.zeta^(m/2)_trivial_on_directions", True,
              bool(half) and half[0].trivial_on_directions, "stated")
        # fixed locus of zeta^(m/2): origin times the whole P^1, one-dimensional
        dim = 1 if half and half[0].fixes_only_origin and half[0].trivial_on_directions else 0
        r.add(f"action.n{n}.singular_locus_dimension", 1, dim, "stated")
    return r


def _invariants(K: CyclotomicField, pt: tuple[Fraction, Fraction, Fraction], e: tuple[int, int, int]):
    x, y, z = pt
    e1, e2, e3 = e
    # (x^m, y^m, z^m) do not see the roots of unity; xy and y^2 z pick up zeta^(e1+e2), zeta^(2e2+e3)
    return (K.zeta(e1 + e2).scale(x * y), K.zeta(2 * e2 + e3).scale(y * y * z))


def sandwich_probe(n: int, pt: tuple[Fraction, Fraction, Fraction]) -> bool:
    """Every twist with real invariants has the invariants of the real point itself."""
    if n % 2:
        raise ValueError("the probe needs n even")
    m = n + 1
    K = CyclotomicField(m)
    base = _invariants(K, pt, (0, 0, 0))
    for e1 in range(m):
        for e2 in range(m):
            for e3 in range(m):
                inv = _invariants(K, pt, (e1, e2, e3))
                if all(K.is_real(c) for c in inv) and not all(K.equal(a, b) for a, b in zip(inv, base)):
                    return False
    return True


def random_samples(count: int, seed: int = 20260) -> list[tuple[Fraction, Fraction, Fraction]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        out.append(tuple(Fraction(rng.randint(-50, 50), rng.randint(1, 20)) for _ in range(3)))
    return out


def verify_sandwich(n: int = 2, samples: list | None = None, count: int = 100, seed: int = 20260) -> CasebookReport:
    r = CasebookReport()
    pts = list(samples) if samples is not None else random_samples(count, seed)
    passed = sum(1 for p in pts if sandwich_probe(n, tuple(Fraction(c) for c in p)))
    r.add(f"sandwich.n{n}.samples", len(pts), passed, "derived")
    r.add(f"sandwich.n{n}.unit_point", True, sandwich_probe(n, (Fraction(1),) * 3), "trivial")
    r.add(f"sandwich.n{n}.y_zero", True, sandwich_probe(n, (Fraction(2), Fraction(0), Fraction(-3))), "trivial")
    return r
