"""The eight acceptance criteria; each test records one PASS/FAIL line for the terminal summary."""

import json
import time
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ACCEPTANCE_LINES
from realdelpezzo.casebook import (
    run_casebook,
    verify_group_action,
    verify_invariant_ring,
    verify_sandwich,
)
from realdelpezzo.cli import main
from realdelpezzo.fibration import (
    KIND_TABLE,
    BoundaryCycle,
    CuspDatum,
    FiberKind,
    Infeasible,
    discriminant_profile,
    four_cusp_feasibility,
    monotonicity_changes,
    two_cusp_a4_feasibility,
)
from realdelpezzo.exact import UniPoly, count_roots
from realdelpezzo.invariants import (
    config_weight,
    enumerate_admissible,
    euler_budget,
    replay_all,
    resolution_deltas,
    smoothing_case_table,
)
from realdelpezzo.plane_model import Configuration, Trisection, chart_swap

# Frozen reference data -------------------------------------------------------

TABLE_ROWS = {
    "BlackReturn": (1, 1), "WhiteReturn": (1, -1), "Flex": (2, 0),
    "BlackNode": (2, 1), "WhiteNode": (2, -1), "TangentNode": (3, 0),
    "TransversalCusp": (3, 1), "TangentCusp": (4, 0), "Tacnode": (4, 1),
}

# m = 4 and m = 3 families as listed: (fixed mus, free mu range or None)
LISTED_FAMILIES = {
    4: [((1, 1, 1, 1), None)],
    3: [((1, 1), (1, None)), ((1, 2), (1, 5)), ((1, 3, 3), None), ((2, 2, 2), None)],
}

TARGETS = {
    "2A3+A2": "euler-budget", "A3+2A2": "fibration-euler", "A3+A2+2A1": "smoothing",
    "A3+3A1": "smoothing", "3A2+A1": "fibration-euler", "2A2+2A1": "euler-budget",
    "A2+3A1": "euler-budget",
}

CASE_LINES = {
    "A3+A2+2A1": {3: (6, None), 2: (3, 4), 1: (2, 6)},
    "A3+3A1": {4: (6, None), 3: (3, 4), 2: (3, 4), 1: (2, 6)},
    "2A2+2A1": {1: (3, 4)},
    "A2+3A1": {1: (2, 6), 2: (3, 4)},
}

CASEBOOK_CLAIMS = {
    "branch.trisection_through(0,0)": 0,
    "branch.trisection_through(1/2,0)": 0,
    "branch.point_v_3": (Fraction(1, 27), Fraction(25, 81)),
    "chain.e(Ytilde)": -7,
    "chain.e(Y)": -1,
    "chain.e(Z)": -3,
    "chain.lambda(S)": 2,
    "chain.rho(S)": 3,
    "chain.rho(X)": 1,
    "orbifold.chi": Fraction(-1, 3),
}


def record(n, ok, detail):
    ACCEPTANCE_LINES[n] = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    print(ACCEPTANCE_LINES[n])
    assert ok, detail


def listed(max_mu):
    out = set()
    for m, fams in LISTED_FAMILIES.items():
        for fixed, free in fams:
            if free is None:
                out.add(tuple(sorted(fixed)))
                continue
            lo, hi = free
            for mu in range(lo, (max_mu if hi is None else min(hi, max_mu)) + 1):
                out.add(tuple(sorted(fixed + (mu,))))
    return out


# 1 ---------------------------------------------------------------------------

def test_criterion_1_casebook(capsys):
    t0 = time.perf_counter()
    rep = run_casebook()
    elapsed = time.perf_counter() - t0
    wrong = [cid for cid, v in CASEBOOK_CLAIMS.items()
             if rep.get(cid).computed != v or rep.get(cid).status != "pass"]
    y_identity = rep.get("branch.y_times_v4")
    ok = rep.passed and not wrong and y_identity.status == "pass" and elapsed < 10
    code = main(["verify-casebook"])
    capsys.readouterr()
    ok = ok and code == 0
    record(1, ok, f"{len(rep.claims)} claims, {len(rep.failures())} failures, named mismatches {wrong}, "
                  f"{elapsed:.1f} s (limit 10 s), CLI exit {code}")


# 2 ---------------------------------------------------------------------------

def test_criterion_2_enumeration(capsys):
    en = enumerate_admissible(8)
    got = {tuple(sorted(c.mus)) for c in en.configurations if len(c) >= 3}
    want = listed(8)
    fams3 = {f.name for f in en.families[3]}
    code = main(["enumerate-configs", "--seven-targets"])
    doc = json.loads(capsys.readouterr().out)
    tags = {t["label"]: t["method"] for t in doc["seven_targets"]}
    ok = got == want and len(fams3) == 4 and [f.name for f in en.families[4]] == ["4A1"] \
        and tags == TARGETS and code == 0
    record(2, ok, f"{len(got)} configurations with m >= 3 equal the listed families "
                  f"({len(fams3)} for m = 3, 4A1 for m = 4); seven targets and tags "
                  f"{'match' if tags == TARGETS else 'differ'}")


# 3 ---------------------------------------------------------------------------

def test_criterion_3_discriminant(corpus, analyses):
    names = [c.name for c in corpus]
    bad = [c.name for c in corpus
           if discriminant_profile(c.trisection).total != 12 or analyses[c.name].delta_total != 12]
    ok = len(corpus) >= 20 and not bad and "three-parabolas" in names and "branch-curve" in names
    record(3, ok, f"total multiplicity 12 on {len(corpus) - len(bad)}/{len(corpus)} curves")


# 4 ---------------------------------------------------------------------------

def test_criterion_4_table(analyses):
    seen = {}
    for name, a in analyses.items():
        for f in a.fibers:
            if f.kind is not None and f.kind.value not in seen:
                seen[f.kind.value] = (name, (f.delta_multiplicity, f.euler))
    rows_ok = all(k in seen and seen[k][1] == row for k, row in TABLE_ROWS.items())
    table_ok = {k.value: v for k, v in KIND_TABLE.items()} == TABLE_ROWS
    disagree = [n for n, a in analyses.items() if a.euler_fibration != a.euler_cells]
    ok = rows_ok and table_ok and not disagree
    record(4, ok, f"witnesses for {len(seen)}/9 kinds; Euler routes agree on "
                  f"{len(analyses) - len(disagree)}/{len(analyses)} curves")


# 5 ---------------------------------------------------------------------------

def orbit_oracle(mu):
    """Real exceptional classes and Euler change for an A_mu^+ resolution: the real structure
    reverses the chain of mu curves; a fixed middle curve exists iff mu is odd."""
    orbits = len({frozenset((i, mu + 1 - i)) for i in range(1, mu + 1)})
    return orbits, -1 if mu % 2 else 0


def test_criterion_5_bookkeeping(analyses):
    checked_rho, checked_e, failures = 0, 0, []
    for name, a in analyses.items():
        conf = a.configuration()
        plus = [p for p in conf.points if p.sign == "+"]
        if plus:
            want = [orbit_oracle(p.mu) for p in plus]
            drho, de = resolution_deltas(Configuration(tuple(plus)))
            if (drho, de) != (sum(w[0] for w in want), sum(w[1] for w in want)):
                failures.append(f"{name}: delta rho")
            checked_rho += 1
        smooth = not a.singularities and not a.model.solitary
        if smooth:
            # closed components: b*(M) = 4 - chi(M) with Z/2 coefficients
            b_star = sum(4 - c.chi for c in a.model.components)
            b1 = sum(2 - c.chi for c in a.model.components)
            lam = Fraction(12 - b_star, 2)
            rho = b1 + lam
            if lam < 0 or lam.denominator != 1 or a.euler_fibration + 2 * rho != 12:
                failures.append(f"{name}: e + 2 rho")
            checked_e += 1
    X = analyses["deformed-X"]
    x_conf = Configuration(tuple(p for p in X.configuration().points if p.sign == "+"))
    budget = euler_budget(x_conf)
    bracket = min(budget) <= X.euler_fibration <= max(budget)
    ok = not failures and checked_rho > 0 and checked_e > 0 and bracket
    record(5, ok, f"2 delta rho checked on {checked_rho} surfaces, e + 2 rho = 12 on {checked_e} "
                  f"smooth surfaces, budget {list(budget)} brackets e = {X.euler_fibration}"
                  + (f"; failures {failures}" if failures else ""))


# 6 ---------------------------------------------------------------------------

def test_criterion_6_replays():
    reps = replay_all()
    excluded = [r.target.label for r in reps if r.excluded]
    four = [four_cusp_feasibility([CuspDatum(2, vertical=bool(v)) for v in flags])
            for flags in product((0, 1), repeat=4)]
    two = [two_cusp_a4_feasibility([CuspDatum(mu, vertical=bool(v)) for mu, v in zip((2, 2, 4), flags)])
           for flags in product((0, 1), repeat=3)]
    transport_ok = all(isinstance(v, Infeasible) for v in four + two)
    mismatched = []
    for label, lines in CASE_LINES.items():
        (rep,) = [r for r in reps if r.target.label == label]
        table = {ln.c: ln for ln in smoothing_case_table(rep.target.config)}
        for c, (b0, b1) in lines.items():
            ln = table.get(c)
            if ln is None or ln.profile.b0 != b0 or (b1 is not None and ln.profile.b1 != b1) or ln.admissible:
                mismatched.append(f"{label} c={c}")
    ok = len(excluded) == 7 and transport_ok and not mismatched
    n_lines = sum(len(v) for v in CASE_LINES.values())
    record(6, ok, f"{len(excluded)}/7 targets excluded; transport Infeasible on "
                  f"{sum(isinstance(v, Infeasible) for v in four + two)}/{len(four + two)} layouts; "
                  f"{n_lines - len(mismatched)}/{n_lines} case-table lines match")


# 7 ---------------------------------------------------------------------------

COUNTS = {"cycles": 0, "roots": 0, "charts": 0, "weights": 0}
SEEDED = dict(derandomize=True, deadline=None, database=None)
ADMISSIBLE_8 = {c.mus for c in enumerate_admissible(8).configurations}


@settings(max_examples=300, **SEEDED)
@given(st.lists(st.sampled_from((1, -1)), min_size=1, max_size=30))
def _cycles(d):
    COUNTS["cycles"] += 1
    assert monotonicity_changes(BoundaryCycle(tuple(d))) % 2 == 0


@settings(max_examples=300, **SEEDED)
@given(st.lists(st.integers(-12, 12), min_size=0, max_size=12, unique=True))
def _roots(rs):
    COUNTS["roots"] += 1
    p = UniPoly.from_roots([Fraction(r, 2) for r in rs]) * UniPoly([1, 0, 1])
    if p.degree > 12:
        return
    grid = [Fraction(k, 4) for k in range(-30, 31)]  # roots sit on halves, so every sign change is seen
    signs = [p(x) for x in grid]
    nonzero = [s for s in signs if s != 0]
    flips = sum(1 for a, b in zip(nonzero, nonzero[1:]) if (a > 0) != (b > 0))
    assert count_roots(p) == flips == len(rs)


@settings(max_examples=200, **SEEDED)
@given(st.lists(st.integers(-9, 9), max_size=3), st.lists(st.integers(-9, 9), max_size=5),
       st.lists(st.integers(-9, 9), min_size=1, max_size=7))
def _charts(a, b, c):
    COUNTS["charts"] += 1
    t = Trisection(UniPoly(a), UniPoly(b), UniPoly(c))
    assert chart_swap(chart_swap(t)) == t


@settings(max_examples=300, **SEEDED)
@given(st.lists(st.integers(1, 8), min_size=1, max_size=5))
def _weights(mus):
    COUNTS["weights"] += 1
    c = Configuration.of(*mus)
    assert config_weight(c)[1] == (c.mus in ADMISSIBLE_8)


def test_criterion_7_properties():
    failures = []
    for fn in (_cycles, _roots, _charts, _weights):
        try:
            fn()
        except Exception as exc:  # noqa: BLE001 - reported through the criterion line
            failures.append(f"{fn.__name__}: {type(exc).__name__}")
    total = sum(COUNTS.values())
    record(7, not failures and total >= 1000,
           f"{total} seeded cases across {len(COUNTS)} suites" + (f"; failures {failures}" if failures else ""))


# 8 ---------------------------------------------------------------------------

def test_criterion_8_quotients():
    t0 = time.perf_counter()
    ring = all(verify_invariant_ring(n).passed for n in (2, 4, 6))
    free = all(verify_group_action(n).passed for n in (2, 4))
    trivial = all(verify_group_action(n).passed for n in (1, 3))
    sand = verify_sandwich(2, count=100)
    samples = sand.get("sandwich.n2.samples").computed
    elapsed = time.perf_counter() - t0
    ok = ring and free and trivial and sand.passed and samples == 100 and elapsed < 30
    record(8, ok, f"ring identity {ring}, free action {free}, trivial action {trivial}, "
                  f"sandwich {samples}/100, {elapsed:.1f} s (limit 30 s)")


@pytest.fixture(autouse=True, scope="module")
def _reset_counts():
    for k in COUNTS:
        COUNTS[k] = 0
    yield
