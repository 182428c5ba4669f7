from fractions import Fraction
from itertools import product
from math import prod

import pytest

from realdelpezzo.invariants import (
    FAMILIES,
    Bucket,
    ExclusionMethod,
    Scenario,
    SeifertData,
    SurfaceInvariants,
    comessatti_identity,
    config_weight,
    enumerate_admissible,
    enumerate_fibrations,
    euler_budget,
    invariants_from_real_part,
    is_in_closure,
    orbifold_classify,
    orientable_base_nonnegative,
    point_weight,
    replay_all,
    resolution_deltas,
    seifert_from_config,
    seven_targets,
    smoothing_case_table,
)
from realdelpezzo.plane_model import ConfigPoint, Configuration

# Frozen from the published tables; None marks a bound that is not stated.
PUBLISHED_CASE_LINES = {
    "A3+A2+2A1": {3: (6, None), 2: (3, 4), 1: (2, 6)},
    "A3+3A1": {4: (6, None), 3: (3, 4), 2: (3, 4), 1: (2, 6)},
    "2A2+2A1": {1: (3, 4)},
    "A2+3A1": {1: (2, 6), 2: (3, 4)},
}
# tables given for every c; the others list only the lines used in the argument
COMPLETE_TABLES = {"A3+A2+2A1", "A3+3A1"}

# The seven survivors, grouped by the argument that removes them.
PUBLISHED_TARGETS = {
    "A3+A2+2A1": "smoothing",
    "A3+3A1": "smoothing",
    "A3+2A2": "fibration-euler",
    "3A2+A1": "fibration-euler",
    "2A3+A2": "euler-budget",
    "2A2+2A1": "euler-budget",
    "A2+3A1": "euler-budget",
}


def brute_force(max_mu):
    """Multisets of at most four mus with sum mu/(mu+1) <= 2, by integer cross-multiplication."""
    out = set()
    for m in range(1, 5):
        for mus in product(range(1, max_mu + 1), repeat=m):
            mus = tuple(sorted(mus))
            den = prod(u + 1 for u in mus)
            num = sum(u * den // (u + 1) for u in mus)
            if num <= 2 * den:
                out.add(mus)
    return out


class TestWeights:
    def test_point_weight(self):
        assert [point_weight(m) for m in (1, 2, 3)] == [Fraction(1, 2), Fraction(2, 3), Fraction(3, 4)]

    def test_config_weight(self):
        assert config_weight(Configuration.of(1, 1, 1, 1)) == (2, True)
        assert config_weight(Configuration.of(2, 2, 2)) == (2, True)
        assert config_weight(Configuration.of(1, 1, 1, 1, 1))[1] is False
        assert config_weight(Configuration.of(3, 2, 1, 1))[1] is False


class TestEnumeration:
    def test_matches_brute_force(self):
        got = {tuple(sorted(c.mus)) for c in enumerate_admissible(8).configurations}
        assert got == brute_force(8)
        assert len(got) == 59

    def test_max_mu_one(self):
        en = enumerate_admissible(1)
        assert {c.mus for c in en.configurations} == {(1,) * k for k in range(1, 5)}

    def test_rejects_bad_bound(self):
        with pytest.raises(ValueError):
            enumerate_admissible(0)

    def test_published_families(self):
        assert [f.name for f in FAMILIES[4]] == ["4A1"]
        assert sorted(f.name for f in FAMILIES[3]) == sorted(
            ["2A1+Amu", "A1+A2+Amu", "A1+2A3", "3A2"])
        a1a2 = [f for f in FAMILIES[3] if f.name == "A1+A2+Amu"][0]
        assert a1a2.contains((1, 2, 5)) and not a1a2.contains((1, 2, 6))

    def test_closure(self):
        assert is_in_closure(Configuration.of(7, 9))
        assert is_in_closure(Configuration.of(1, 1, 20))
        assert not is_in_closure(Configuration.of(3, 2, 2))
        assert not is_in_closure(Configuration.of(1, 1, 1, 1, 1))


class TestTargets:
    def test_set_and_tags(self):
        got = {t.label: t.method.value for t in seven_targets()}
        assert got == PUBLISHED_TARGETS

    def test_targets_violate_the_inequality(self):
        for t in seven_targets():
            assert not config_weight(t.config)[1]
            assert not is_in_closure(t.config)


class TestBookkeeping:
    @pytest.mark.parametrize("mus,budget", [
        ((3, 3, 2), (0, -2)),
        ((2, 2, 1, 1), (2, 0)),
        ((2, 1, 1, 1), (3, 1)),
    ])
    def test_budgets(self, mus, budget):
        assert euler_budget(Configuration.of(*mus)) == budget

    def test_budget_single_rho(self):
        assert euler_budget(Configuration.of(2, 2, 1, 1), 2) == (0,)
        with pytest.raises(ValueError):
            euler_budget(Configuration.of(1), 3)

    def test_deltas(self):
        assert resolution_deltas(Configuration.of(2)) == (1, 0)
        assert resolution_deltas(Configuration.of(3)) == (2, -1)
        assert resolution_deltas(Configuration.of(1)) == (1, -1)
        with pytest.raises(ValueError):
            resolution_deltas(Configuration((ConfigPoint(2, "-"),)))

    def test_comessatti(self):
        inv = invariants_from_real_part(2, 4)
        assert (inv.e_real, inv.rho_real, inv.lam, inv.b_star_R) == (0, 6, 2, 8)
        assert comessatti_identity(inv, 12)
        bad = SurfaceInvariants(5, 2, 12, 8, 0)
        rep = comessatti_identity(bad)
        assert not rep and rep.violated
        with pytest.raises(ValueError):
            invariants_from_real_part(1, 1)


class TestOrbifold:
    def test_buckets(self):
        assert orbifold_classify(1, SeifertData((3, 3), ())).chi_orb == Fraction(-1, 3)
        assert orbifold_classify(1, SeifertData((3, 3), ())).bucket == Bucket.Hyperbolic
        assert orbifold_classify(2, SeifertData((2, 2, 2, 2), ())).bucket == Bucket.Euclidean
        assert orbifold_classify(0, SeifertData((), ())).bucket == Bucket.Euclidean
        assert orbifold_classify(2, SeifertData((), ())).bucket == Bucket.Spherical

    def test_seifert_filters_odd_points(self):
        c = Configuration.of(3, 2, 1)
        s = seifert_from_config(c, [True, None, False])
        assert sorted(s.multiplicities) == [3, 4]
        with pytest.raises(ValueError):
            seifert_from_config(c, [True])

    def test_orientable_base(self):
        assert orientable_base_nonnegative(2, SeifertData((2, 2, 2, 2), ()))
        with pytest.raises(ValueError):
            orientable_base_nonnegative(0, SeifertData((2,), ()))


class TestCaseTables:
    @pytest.mark.parametrize("label", sorted(PUBLISHED_CASE_LINES))
    def test_against_published_lines(self, label):
        (t,) = [t for t in seven_targets() if t.label == label]
        table = {ln.c: ln for ln in smoothing_case_table(t.config)}
        if label in COMPLETE_TABLES:
            assert set(table) == set(PUBLISHED_CASE_LINES[label])
        for c, (b0, b1) in PUBLISHED_CASE_LINES[label].items():
            ln = table[c]
            assert ln.profile.b0 == b0
            if b1 is not None:
                assert ln.profile.b1 == b1
            assert not ln.admissible

    def test_only_small_points(self):
        with pytest.raises(ValueError):
            smoothing_case_table(Configuration.of(4, 1))


class TestReplays:
    def test_all_excluded(self):
        reps = replay_all()
        assert len(reps) == 7
        for r in reps:
            assert r.excluded, r.to_json()
            assert r.to_json()["method"] == r.target.method.value

    def test_budget_only_enumeration(self):
        sc = Scenario("t", (("P0", 2, ()), ("P1", 1, ())))
        en = enumerate_fibrations(sc, (99,))
        assert not en.feasible and en.examined > 0

    def test_methods_used(self):
        assert {t.method for t in seven_targets()} == set(ExclusionMethod)
