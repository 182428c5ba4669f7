"""Replays of the exclusion arguments for the seven leftover configurations.

Two tools do the work.

The smoothing case table fixes, for each number c of components meeting the
main component M0, a smoothing rule per singular point and bounds the Betti
numbers of the smoothed real part.  A bound outside the list of real smooth
types kills the case; a bound that saturates b0 = 5 pins the normalization
down to K + (c)S and hence its Euler number.

The fiber enumerator lists every assignment of the nine fiber kinds to the singular
points plus any number of returns and flexes, and keeps those satisfying:
the discriminant budget (total 12, the non-real remainder even), the Euler
target, even turn counts on every component and at least two turns on every
sphere.  A turn is a change of monotonicity of x along the boundary of the
region of positivity.  Turns per kind:

================  =====  ======  =============================================
kind              mult   euler   turns and placement
================  =====  ======  =============================================
BlackReturn       1      +1      1 on any component
WhiteReturn       1      -1      1, only on M_inf
Flex              2      0       0, only on M_inf
BlackNode         2      +1      1 on each sheet
WhiteNode         2      -1      0; one sheet is M_inf
TangentNode       3      0       0 on the M_inf sheet, 1 on the other
TransversalCusp   3      +1      1
TangentCusp       4      0       0; only on M_inf
Tacnode           4      +1      1 on each sheet
================  =====  ======  =============================================
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from ..fibration.kinds import DELTA_TOTAL, KIND_TABLE, FiberKind
from ..plane_model.configuration import Configuration
from ..topology.smoothing import (
    Component,
    ComponentModel,
    PointRecord,
    SmoothedProfile,
    SmoothingChoice,
    apply_all,
    smoothing_admissible,
    surjections,
)
from .core import ExclusionMethod, Target, euler_budget, seven_targets

K_CHI = 0
S_CHI = 2


@dataclass(frozen=True)
class FiberChoice:
    kind: FiberKind
    point: str | None
    turns: tuple[tuple[str, int], ...] = ()

    @property
    def multiplicity(self) -> int:
        return KIND_TABLE[self.kind][0]

    @property
    def euler(self) -> int:
        return KIND_TABLE[self.kind][1]

    def label(self) -> str:
        where = ",".join(f"{c}:{n}" for c, n in self.turns)
        at = f"@{self.point}" if self.point else ""
        return f"{self.kind.value}{at}" + (f"[{where}]" if where else "")


@dataclass(frozen=True)
class Scenario:
    """Points with the components of their sheets; components=() switches off the turn model."""

    name: str
    points: tuple[tuple[str, int, tuple[str, ...]], ...]
    components: tuple[str, ...] = ()
    top: str | None = None

    @property
    def topological(self) -> bool:
        return bool(self.components)

    @property
    def spheres(self) -> tuple[str, ...]:
        return tuple(c for c in self.components if c != self.top)


def _point_options(sc: Scenario, pid: str, mu: int, sheets: tuple[str, ...]) -> list[FiberChoice]:
    F = FiberKind
    if not sc.topological:
        kinds = {1: (F.BlackNode, F.WhiteNode, F.TangentNode),
                 2: (F.TransversalCusp, F.TangentCusp),
                 3: (F.Tacnode,)}[mu]
        return [FiberChoice(k, pid) for k in kinds]
    top = sc.top
    if mu == 1:
        a, b = sheets
        opts = [FiberChoice(F.BlackNode, pid, ((a, 1), (b, 1)))]
        if top in (a, b):
            other = b if a == top else a
            opts.append(FiberChoice(F.WhiteNode, pid))
            opts.append(FiberChoice(F.TangentNode, pid, ((other, 1),)))
        return opts
    if mu == 2:
        (a,) = sheets
        opts = [FiberChoice(F.TransversalCusp, pid, ((a, 1),))]
        if a == top:
            opts.append(FiberChoice(F.TangentCusp, pid))
        return opts
    if mu == 3:
        a, b = sheets
        return [FiberChoice(F.Tacnode, pid, ((a, 1), (b, 1)))]
    raise ValueError(f"no fiber kinds for A{mu}")


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for k in range(total + 1):
        for rest in _compositions(total - k, parts - 1):
            yield (k,) + rest


def _extras(sc: Scenario, room: int) -> Iterable[list[FiberChoice]]:
    F = FiberKind
    comps = sc.components if sc.topological else ("*",)
    for n_flex in range(room // 2 + 1):
        for n_white in range(room - 2 * n_flex + 1):
            left = room - 2 * n_flex - n_white
            for n_black in range(left + 1):
                for split in _compositions(n_black, len(comps)):
                    out = [FiberChoice(F.Flex, None)] * n_flex
                    top_turn = ((sc.top, 1),) if sc.topological else ()
                    out += [FiberChoice(F.WhiteReturn, None, top_turn)] * n_white
                    for comp, k in zip(comps, split):
                        turn = ((comp, 1),) if sc.topological else ()
                        out += [FiberChoice(F.BlackReturn, None, turn)] * k
                    yield out


@dataclass(frozen=True)
class FiberSolution:
    choices: tuple[FiberChoice, ...]

    @property
    def multiplicity(self) -> int:
        return sum(c.multiplicity for c in self.choices)

    @property
    def euler(self) -> int:
        return sum(c.euler for c in self.choices)

    def label(self) -> str:
        return " + ".join(c.label() for c in self.choices)


@dataclass(frozen=True)
class FiberEnumeration:
    scenario: Scenario
    targets: tuple[int, ...]
    examined: int
    solutions: tuple[FiberSolution, ...]
    eulers_seen: tuple[int, ...]

    @property
    def feasible(self) -> bool:
        return bool(self.solutions)


def _turns_ok(sc: Scenario, choices: Sequence[FiberChoice]) -> bool:
    turns = Counter()
    for ch in choices:
        for comp, n in ch.turns:
            turns[comp] += n
    if any(turns[c] % 2 for c in sc.components):
        return False
    return all(turns[c] >= 2 for c in sc.spheres)


def enumerate_fibrations(sc: Scenario, targets: Iterable[int]) -> FiberEnumeration:
    """All kind assignments compatible with the budget, the turn model and an Euler target."""
    targets = tuple(sorted(set(targets)))
    per_point = [_point_options(sc, pid, mu, sheets) for pid, mu, sheets in sc.points]
    examined, sols, seen = 0, [], set()
    for base in product(*per_point):
        used = sum(c.multiplicity for c in base)
        if used > DELTA_TOTAL:
            continue
        for extra in _extras(sc, DELTA_TOTAL - used):
            choices = list(base) + extra
            mult = sum(c.multiplicity for c in choices)
            if (DELTA_TOTAL - mult) % 2:
                continue
            if sc.topological and not _turns_ok(sc, choices):
                continue
            examined += 1
            e = sum(c.euler for c in choices)
            seen.add(e)
            if e in targets:
                sols.append(FiberSolution(tuple(choices)))
    return FiberEnumeration(sc, targets, examined, tuple(sols), tuple(sorted(seen)))


# ---------------------------------------------------------------- smoothing tables


@dataclass(frozen=True)
class CaseLine:
    """Betti lower bounds of the smoothed real part for one value of c."""

    c: int
    profile: SmoothedProfile
    admissible: bool
    violations: tuple[str, ...]
    spheres_added: int
    forced_tacnode_sphere: bool = False

    @property
    def saturated(self) -> bool:
        return self.admissible and self.profile.b0 >= 5

    def to_json(self) -> dict:
        return {"c": self.c, "b0_at_least": self.profile.b0, "b1_at_least": self.profile.b1,
                "admissible": self.admissible, "violations": list(self.violations)}


def _odd_even(config: Configuration) -> tuple[list[int], list[int]]:
    odd = sorted((p.mu for p in config.points if p.mu % 2), reverse=True)
    even = [p.mu for p in config.points if p.mu % 2 == 0]
    return odd, even


def _forced_tacnode_sphere(config: Configuration, c: int) -> bool:
    odd, _ = _odd_even(config)
    return odd.count(3) == 1 and odd.count(1) == 3 and c <= 2


def _smooth_distribution(config: Configuration, assign: tuple[int, ...], forced: bool):
    """Normalization M0 (b1 = 2) plus spheres M1..Mc, then the smoothing rule of the case table."""
    odd, even = _odd_even(config)
    c = max(assign)
    comps = [Component("M0", K_CHI)] + [Component(f"M{j}", S_CHI) for j in range(1, c + 1)]
    pts, choices = [], []
    for i, mu in enumerate(even):
        pts.append(PointRecord(f"C{i}", mu, "+", ("M0",)))
        choices.append((f"C{i}", SmoothingChoice.PlusSphere))
    tac_sphere = set()
    for i, (mu, j) in enumerate(zip(odd, assign)):
        if mu == 3:
            alone = assign.count(j) == 1
            if alone or forced:
                tac_sphere.add(j)
    for i, (mu, j) in enumerate(zip(odd, assign)):
        pid = f"P{i}"
        pts.append(PointRecord(pid, mu, "+", ("M0", f"M{j}")))
        if mu == 3:
            ch = SmoothingChoice.CutPlusSphere if (assign.count(j) == 1 or forced) else SmoothingChoice.Cylinder
        else:
            others = sum(1 for k, (m2, j2) in enumerate(zip(odd, assign))
                         if j2 == j and k != i and not (m2 == 3 and j2 in tac_sphere))
            ch = SmoothingChoice.Cut if others == 0 else SmoothingChoice.Cylinder
        choices.append((pid, ch))
    model = ComponentModel(tuple(comps), tuple(pts))
    # cylinders first, so merges see the original sheets
    order = sorted(choices, key=lambda pc: pc[1] != SmoothingChoice.Cylinder)
    out = apply_all(model, order)
    added = sum(1 for _, ch in choices if ch in (SmoothingChoice.PlusSphere, SmoothingChoice.CutPlusSphere))
    return out.profile(), added


def smoothing_case_table(config: Configuration) -> list[CaseLine]:
    """One line per c in 1..#odd points; bounds are minima over all distributions of the odd points."""
    if any(p.sign != "+" or p.mu > 3 for p in config.points):
        raise ValueError("case tables cover A1+, A2+ and A3+ points only")
    odd, _ = _odd_even(config)
    lines = []
    for c in range(1, len(odd) + 1):
        forced = _forced_tacnode_sphere(config, c)
        b0 = b1 = None
        spheres = None
        for assign in surjections(len(odd), c):
            prof, added = _smooth_distribution(config, assign, forced)
            b0 = prof.b0 if b0 is None else min(b0, prof.b0)
            b1 = prof.b1 if b1 is None else min(b1, prof.b1)
            spheres = added if spheres is None else min(spheres, added)
        prof = SmoothedProfile(b0, b1, b0_exact=False, b1_exact=False)
        rep = smoothing_admissible(prof)
        lines.append(CaseLine(c, prof, rep.admissible, rep.violations, spheres, forced))
    return lines


# ---------------------------------------------------------------- replays


@dataclass(frozen=True)
class ReplayStep:
    case: str
    tool: str
    contradiction: bool
    detail: str

    def to_json(self) -> dict:
        return {"case": self.case, "tool": self.tool, "contradiction": self.contradiction,
                "detail": self.detail}


@dataclass(frozen=True)
class ExclusionReplay:
    target: Target
    steps: tuple[ReplayStep, ...]
    case_table: tuple[CaseLine, ...] = ()

    @property
    def excluded(self) -> bool:
        return bool(self.steps) and all(s.contradiction for s in self.steps)

    def to_json(self) -> dict:
        return {
            "configuration": self.target.label,
            "method": self.target.method.value,
            "excluded": self.excluded,
            "case_table": [ln.to_json() for ln in self.case_table],
            "steps": [s.to_json() for s in self.steps],
        }


def _fiber_step(case: str, sc: Scenario, targets: tuple[int, ...]) -> ReplayStep:
    en = enumerate_fibrations(sc, targets)
    if en.feasible:
        detail = f"{len(en.solutions)} fibrations reach e in {list(targets)}, e.g. {en.solutions[0].label()}"
    else:
        checks = "budget and turn parity" if sc.topological else "the budget"
        detail = (f"{en.examined} fibrations pass {checks}; "
                  f"their Euler numbers {list(en.eulers_seen)} miss {list(targets)}")
    return ReplayStep(case, "fiber-kinds", not en.feasible, detail)


def _normalization_scenarios(config: Configuration, c: int) -> list[tuple[str, Scenario]]:
    """Every placement of odd points on M1..Mc and every choice of the Klein bottle M_inf."""
    odd, even = _odd_even(config)
    comps = tuple(f"M{j}" for j in range(c + 1))
    seen, out = set(), []
    for assign in surjections(len(odd), c):
        for top in comps:
            pts = [(f"C{i}", mu, ("M0",)) for i, mu in enumerate(even)]
            pts += [(f"P{i}", mu, ("M0", f"M{j}")) for i, (mu, j) in enumerate(zip(odd, assign))]
            # relabel the non-M0 components canonically to drop symmetric duplicates
            key = (top == "M0", tuple(sorted(
                (tuple(sorted(mu for mu, j in zip(odd, assign) if j == k)), f"M{k}" == top)
                for k in range(1, c + 1))))
            if key in seen:
                continue
            seen.add(key)
            name = "M0 = M_inf" if top == "M0" else f"M0 != M_inf ({top} = M_inf)"
            out.append((name, Scenario(name, tuple(pts), comps, top)))
    return out


def _smoothing_replay(t: Target) -> ExclusionReplay:
    table = smoothing_case_table(t.config)
    steps = []
    for ln in table:
        tag = " (cut+sphere forced at the tacnode)" if ln.forced_tacnode_sphere else ""
        steps.append(ReplayStep(f"c = {ln.c}", "smoothing", not ln.admissible,
                                f"{ln.profile.label()}{tag}: " + ("; ".join(ln.violations) or "admissible")))
    return ExclusionReplay(t, tuple(steps), tuple(table))


def _saturated_replay(t: Target) -> ExclusionReplay:
    """Case table, then for the saturated c the fixed normalization and the fiber enumerator."""
    table = smoothing_case_table(t.config)
    odd, _ = _odd_even(t.config)
    budget = set(euler_budget(t.config))
    steps = []
    for ln in table:
        if not ln.admissible:
            steps.append(ReplayStep(f"c = {ln.c}", "smoothing", True,
                                    f"{ln.profile.label()}: " + "; ".join(ln.violations)))
            continue
        if not ln.saturated:
            steps.append(ReplayStep(f"c = {ln.c}", "smoothing", False,
                                    f"{ln.profile.label()} is admissible and does not saturate b0"))
            continue
        n_comp = ln.profile.b0 - ln.spheres_added
        if n_comp != ln.c + 1:
            steps.append(ReplayStep(f"c = {ln.c}", "smoothing", False,
                                    f"normalization has {n_comp} components, expected {ln.c + 1}"))
            continue
        e = K_CHI + S_CHI * (n_comp - 1) - len(odd)
        note = f"b0 = 5 forces K + 4S, normalization K + {n_comp - 1}S, e(X') = {e}"
        if t.method == ExclusionMethod.euler_budget:
            targets = tuple(sorted(budget & {e}))
            note += f"; budget {sorted(budget)} leaves {list(targets)}"
        else:
            targets = (e,)
        steps.append(ReplayStep(f"c = {ln.c}", "normalization", False, note))
        if not targets:
            steps[-1] = ReplayStep(f"c = {ln.c}", "normalization", True, note)
            continue
        for name, sc in _normalization_scenarios(t.config, ln.c):
            steps.append(_fiber_step(f"c = {ln.c}, {name}", sc, targets))
    # the normalization step is informational once every subcase below it fails
    real = tuple(s for s in steps if s.tool != "normalization" or s.contradiction)
    return ExclusionReplay(t, real, tuple(table))


def _budget_replay(t: Target) -> ExclusionReplay:
    targets = euler_budget(t.config)
    pts = tuple((f"P{i}", p.mu, ()) for i, p in enumerate(t.config.sorted().points))
    sc = Scenario("budget only", pts)
    return ExclusionReplay(t, (_fiber_step("all layouts", sc, targets),))


def replay_exclusion(t: Target) -> ExclusionReplay:
    if t.method == ExclusionMethod.smoothing:
        return _smoothing_replay(t)
    if t.method == ExclusionMethod.fibration_euler:
        return _saturated_replay(t)
    first = _budget_replay(t)
    if first.excluded:
        return first
    return _saturated_replay(t)


def replay_all() -> list[ExclusionReplay]:
    return [replay_exclusion(t) for t in seven_targets()]
