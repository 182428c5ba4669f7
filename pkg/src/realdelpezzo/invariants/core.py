"""Numeric invariants: the configuration inequality, Picard and Euler bookkeeping, Seifert data."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable

from ..plane_model.configuration import ConfigPoint, Configuration

MAX_POINTS = 4
WEIGHT_BOUND = Fraction(2)


def point_weight(mu: int) -> Fraction:
    return 1 - Fraction(1, mu + 1)


def config_weight(c: Configuration) -> tuple[Fraction, bool]:
    w = sum((point_weight(p.mu) for p in c.points), Fraction(0))
    return w, w <= WEIGHT_BOUND and len(c) <= MAX_POINTS


@dataclass(frozen=True)
class Family:
    """A family of configurations: fixed mus plus at most one free A_mu with mu in [lo, hi]."""

    name: str
    fixed: tuple[int, ...]
    free_lo: int | None = None
    free_hi: int | None = None  # None: unbounded

    @property
    def size(self) -> int:
        return len(self.fixed) + (1 if self.free_lo is not None else 0)

    def members(self, max_mu: int) -> list[Configuration]:
        if self.free_lo is None:
            return [Configuration.of(*self.fixed)]
        hi = max_mu if self.free_hi is None else min(self.free_hi, max_mu)
        return [Configuration.of(*self.fixed, mu) for mu in range(self.free_lo, hi + 1)]

    def contains(self, mus: tuple[int, ...]) -> bool:
        mus = tuple(sorted(mus))
        if len(mus) != self.size:
            return False
        if self.free_lo is None:
            return mus == tuple(sorted(self.fixed))
        for k, mu in enumerate(mus):
            rest = mus[:k] + mus[k + 1:]
            if rest == tuple(sorted(self.fixed)) and mu >= self.free_lo and (
                self.free_hi is None or mu <= self.free_hi
            ):
                return True
        return False


FAMILIES: dict[int, tuple[Family, ...]] = {
    4: (Family("4A1", (1, 1, 1, 1)),),
    3: (
        Family("2A1+Amu", (1, 1), 1, None),
        Family("A1+A2+Amu", (1, 2), 1, 5),
        Family("A1+2A3", (1, 3, 3)),
        Family("3A2", (2, 2, 2)),
    ),
    2: (Family("Amu+Anu", (), None, None),),
}


@dataclass(frozen=True)
class AdmissibleEnumeration:
    max_mu: int
    families: dict[int, tuple[Family, ...]]
    configurations: tuple[Configuration, ...]

    def by_size(self, m: int) -> list[Configuration]:
        return [c for c in self.configurations if len(c) == m]


def _exhaustive(max_mu: int) -> list[Configuration]:
    out = []
    for m in range(1, MAX_POINTS + 1):
        for mus in combinations_with_replacement(range(1, max_mu + 1), m):
            c = Configuration.of(*mus)
            if config_weight(c)[1]:
                out.append(c)
    return out


def enumerate_admissible(max_mu: int = 8) -> AdmissibleEnumeration:
    """Families for three and four points, pair patterns for two, and the explicit list up to max_mu."""
    if max_mu < 1:
        raise ValueError("max_mu must be at least 1")
    configs = _exhaustive(max_mu)
    for c in configs:
        if len(c) >= 3 and not any(f.contains(c.mus) for f in FAMILIES[len(c)]):
            raise AssertionError(f"{c.label()} escapes the family list")
    return AdmissibleEnumeration(max_mu, FAMILIES, tuple(configs))


def is_in_closure(c: Configuration) -> bool:
    """Membership in the listed families (any configuration of at most two points qualifies)."""
    m = len(c)
    if m > MAX_POINTS:
        return False
    if m <= 2:
        return True
    return any(f.contains(c.mus) for f in FAMILIES[m])


class ExclusionMethod(str, Enum):
    smoothing = "smoothing"
    fibration_euler = "fibration-euler"
    euler_budget = "euler-budget"


@dataclass(frozen=True)
class Target:
    config: Configuration
    method: ExclusionMethod

    @property
    def label(self) -> str:
        return self.config.label()


def seven_targets() -> list[Target]:
    """The seven configurations left after the delta count and the branch-transport arguments."""
    S, F, E = ExclusionMethod.smoothing, ExclusionMethod.fibration_euler, ExclusionMethod.euler_budget
    return [
        Target(Configuration.of(3, 2, 1, 1), S),
        Target(Configuration.of(3, 1, 1, 1), S),
        Target(Configuration.of(3, 2, 2), F),
        Target(Configuration.of(2, 2, 2, 1), F),
        Target(Configuration.of(3, 3, 2), E),
        Target(Configuration.of(2, 2, 1, 1), E),
        Target(Configuration.of(2, 1, 1, 1), E),
    ]


def _require_plus(c: Configuration) -> None:
    bad = [p.label for p in c.points if p.sign != "+"]
    if bad:
        raise ValueError(f"only A^+ points are allowed, got {', '.join(bad)}")


def resolution_deltas(c: Configuration) -> tuple[Fraction, int]:
    """(rho(S') - rho(X'), e(S'(R)) - e(X'(R))) for the minimal resolution."""
    _require_plus(c)
    drho = Fraction(0)
    de = 0
    for p in c.points:
        if p.mu % 2:
            drho += 1 + Fraction(p.mu - 1, 2)
            de -= 1
        else:
            drho += Fraction(p.mu, 2)
    return drho, de


def mu_sum(c: Configuration) -> int:
    return sum(p.mu for p in c.points)


def euler_budget(c: Configuration, rho_X: int | None = None) -> tuple[int, ...]:
    """e(X'(R)) = 12 - 2 rho(X') - sum mu, with rho(X') = rho(X) + 1 and rho(X) in {1, 2}."""
    _require_plus(c)
    if rho_X is None:
        return tuple(12 - 2 * (r + 1) - mu_sum(c) for r in (1, 2))
    if rho_X not in (1, 2):
        raise ValueError("rho(X) must be 1 or 2")
    return (12 - 2 * (rho_X + 1) - mu_sum(c),)


@dataclass(frozen=True)
class SurfaceInvariants:
    rho_real: int
    lam: Fraction | int
    b_star_C: int
    b_star_R: int
    e_real: int


@dataclass(frozen=True)
class IdentityReport:
    ok: bool
    violated: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def comessatti_identity(inv: SurfaceInvariants, total: int | None = None) -> IdentityReport:
    """e + 2 rho = b*_R + 2 lambda = b*_C (= total, 12 for a smooth rational elliptic surface)."""
    viol = []
    if any(v < 0 for v in (inv.rho_real, inv.lam, inv.b_star_C, inv.b_star_R)):
        viol.append("invariants must be nonnegative")
    if 2 * inv.lam != inv.b_star_C - inv.b_star_R:
        viol.append("2 lambda = b*_C - b*_R")
    if inv.e_real + 2 * inv.rho_real != inv.b_star_R + 2 * inv.lam:
        viol.append("e + 2 rho = b*_R + 2 lambda")
    if inv.b_star_R + 2 * inv.lam != inv.b_star_C:
        viol.append("b*_R + 2 lambda = b*_C")
    if total is not None and inv.b_star_C != total:
        viol.append(f"b*_C = {total}")
    return IdentityReport(not viol, tuple(viol))


def invariants_from_real_part(b0: int, b1: int, b_star_C: int = 12) -> SurfaceInvariants:
    """Invariants of a smooth real rational surface with real part of Betti numbers (b0, b1)."""
    b_star_R = 2 * b0 + b1
    e = 2 * b0 - b1
    lam = Fraction(b_star_C - b_star_R, 2)
    rho = Fraction(b_star_C - e, 2)
    if lam.denominator != 1 or rho.denominator != 1:
        raise ValueError("parity mismatch between real and complex Betti numbers")
    return SurfaceInvariants(int(rho), int(lam), b_star_C, b_star_R, e)


@dataclass(frozen=True)
class SeifertData:
    multiplicities: tuple[int, ...]
    provenance: tuple[str, ...]
    base_chi: int | None = None

    @property
    def k(self) -> int:
        return len(self.multiplicities)

    def defect(self) -> Fraction:
        return sum((1 - Fraction(1, n) for n in self.multiplicities), Fraction(0))


def seifert_from_config(c: Configuration, separating: Iterable[bool | None] | None = None,
                        base_chi: int | None = None) -> SeifertData:
    """Multiple fibers n = mu + 1 from A^+ points, odd ones only when globally separating."""
    flags = list(separating) if separating is not None else [p.separating for p in c.points]
    if len(flags) != len(c):
        raise ValueError("one separating flag per point")
    ns, prov = [], []
    for p, sep in zip(c.points, flags):
        if p.sign != "+":
            continue
        if p.mu % 2 == 1 and sep is not True:
            continue
        ns.append(p.mu + 1)
        prov.append(p.label)
    s = SeifertData(tuple(ns), tuple(prov), base_chi)
    if s.defect() != config_weight(Configuration(tuple(ConfigPoint(n - 1) for n in ns)))[0]:
        raise AssertionError("Seifert defect disagrees with the configuration weight")
    return s


class Bucket(str, Enum):
    Spherical = "Spherical"
    Euclidean = "Euclidean"
    Hyperbolic = "Hyperbolic"


@dataclass(frozen=True)
class OrbifoldClass:
    chi_orb: Fraction
    bucket: Bucket
    base_orientable: bool

    def to_json(self) -> dict:
        from ..exact import format_rat

        return {"chi_orb": format_rat(self.chi_orb), "bucket": self.bucket.value,
                "base_orientable": self.base_orientable}


def orbifold_classify(base_chi: int, s: SeifertData, base_orientable: bool | None = None) -> OrbifoldClass:
    """chi_orb = chi(|F|) - sum(1 - 1/n); even chi is taken as orientable unless told otherwise."""
    if base_orientable is None:
        base_orientable = base_chi % 2 == 0
    if base_orientable and base_chi not in (2, 0) and base_chi % 2 == 0 and base_chi > 2:
        raise ValueError("a closed orientable surface has chi <= 2")
    chi = Fraction(base_chi) - s.defect()
    bucket = Bucket.Spherical if chi > 0 else Bucket.Euclidean if chi == 0 else Bucket.Hyperbolic
    return OrbifoldClass(chi, bucket, base_orientable)


def orientable_base_nonnegative(base_chi: int, s: SeifertData) -> bool:
    """Orientable components of the real part are spheres or tori, and tori carry no multiple fibers;
    with an admissible configuration the orbifold is then never hyperbolic."""
    if base_chi not in (2, 0):
        raise ValueError("orientable components are spheres or tori")
    if base_chi == 0 and s.k:
        raise ValueError("a torus component carries no A^+ points")
    weight_ok = s.defect() <= WEIGHT_BOUND and s.k <= MAX_POINTS
    return (not weight_ok) or orbifold_classify(base_chi, s, True).chi_orb >= 0
