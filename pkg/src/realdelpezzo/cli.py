"""Command line front end.

Exit codes: 0 success, 1 excluded or infeasible verdict, 2 input error,
3 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path
from typing import Any, Sequence

from .analysis import CoverAnalysis, EulerMismatch, analyze_cover
from .exact import format_rat
from .fibration import NonReducedTrisection, OutOfTableScope
from .invariants import (
    SeifertData,
    config_weight,
    enumerate_admissible,
    euler_budget,
    is_in_closure,
    mu_sum,
    orbifold_classify,
    replay_exclusion,
    seven_targets,
    smoothing_case_table,
)
from .invariants.core import Target
from .jsonio import (
    SCHEMA_VERSION,
    InputError,
    config_from_json,
    curve_from_json,
    curve_to_json,
    dumps,
    parse_config_label,
    read_document,
    script_from_json,
    stamp,
)
from .plane_model import Configuration, CrossCheckFailure, NotDuVal, UnsupportedSingularity
from .topology import IllegalSmoothing, SweepError, apply_all, smoothing_admissible

EXIT_OK, EXIT_VERDICT, EXIT_INPUT, EXIT_CROSSCHECK = 0, 1, 2, 3
REPORTS = ("fibration", "topology", "invariants", "all")
DEFAULT_SEED = 20260


class CommandError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _emit(doc: dict[str, Any], out: str | None) -> None:
    text = dumps(doc)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_curve(args: argparse.Namespace) -> tuple[Any, int, str]:
    if getattr(args, "random", False):
        from .corpus import random_trisection

        t = random_trisection(random.Random(args.seed))
        return t, 1, f"random-{args.seed}"
    if not args.curve:
        raise InputError("a curve file is required")
    return curve_from_json(read_document(args.curve))


def _run_analysis(t, sign: int) -> CoverAnalysis:
    try:
        return analyze_cover(t, sign)
    except EulerMismatch as exc:
        raise CommandError(EXIT_CROSSCHECK, f"Euler cross-check failed: {exc}") from exc
    except CrossCheckFailure as exc:
        raise CommandError(EXIT_CROSSCHECK, f"internal cross-check failed: {exc}") from exc
    except (NonReducedTrisection, UnsupportedSingularity, NotDuVal, OutOfTableScope) as exc:
        raise CommandError(EXIT_INPUT, f"curve outside the supported scope: {exc}") from exc
    except SweepError as exc:
        raise CommandError(EXIT_CROSSCHECK, f"cell decomposition failed: {exc}") from exc


def invariants_block(a: CoverAnalysis) -> dict[str, Any]:
    conf = a.filtered_configuration()
    plus = Configuration(tuple(p for p in conf.points if p.sign == "+"))
    w, ok = config_weight(plus)
    budgets = {}
    for rho in (1, 2):
        try:
            budgets[str(rho)] = euler_budget(plus, rho)[0]
        except ValueError:
            budgets[str(rho)] = None
    return {
        "configuration": conf.to_json(),
        "label": conf.label(),
        "weight": format_rat(w),
        "admissible": ok,
        "in_listed_families": is_in_closure(plus),
        "mu_sum": mu_sum(plus),
        "euler_budget_by_rho": budgets,
        "euler_del_pezzo": a.euler_del_pezzo,
    }


def analysis_document(a: CoverAnalysis, report: str, name: str = "") -> dict[str, Any]:
    full = a.to_json()
    body: dict[str, Any] = {
        "curve": curve_to_json(a.trisection, a.sign, name),
        "delta_total": a.delta_total,
        "cross_check": full["cross_check"],
    }
    if report in ("fibration", "all"):
        body["fibration"] = {**full["fibration"], "totals": {"delta_total": a.delta_total,
                                                              "euler": a.euler_fibration}}
    if report in ("topology", "all"):
        body["singular_points"] = full["singular_points"]
        body["topology"] = full["topology"]
    if report in ("invariants", "all"):
        body["invariants"] = invariants_block(a)
    body["notes"] = full["notes"]
    return stamp(body, "analysis")


def cmd_analyze(args: argparse.Namespace) -> int:
    t, sign, name = _load_curve(args)
    if args.sign is not None:
        sign = args.sign
    script = script_from_json(read_document(args.script)) if args.script else None
    a = _run_analysis(t, sign)
    doc = analysis_document(a, args.report, name)
    code = EXIT_OK
    if script is not None:
        doc["smoothing"], code = _smoothing_block(a, script)
    _emit(doc, args.out)
    if args.svg:
        from .plot import render_svg

        Path(args.svg).write_text(render_svg(t, sign))
    return code


def _smoothing_block(a: CoverAnalysis, script) -> tuple[dict[str, Any], int]:
    try:
        m = apply_all(a.model, script)
    except (IllegalSmoothing, KeyError) as exc:
        raise InputError(f"smoothing script rejected: {exc}") from exc
    prof = m.profile()
    rep = smoothing_admissible(prof)
    block = {
        "script": [{"point_id": p, "choice": c.value} for p, c in script],
        "components": m.to_json(),
        "remaining_points": [p.id for p in m.points],
        "b0": prof.b0,
        "b1": prof.b1,
        "admissible": rep.admissible,
        "violations": list(rep.violations),
        "matches": [list(x) for x in rep.matches],
    }
    return block, EXIT_OK if rep.admissible else EXIT_VERDICT


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.max_mu < 1:
        raise InputError("--max-mu must be at least 1")
    en = enumerate_admissible(args.max_mu)
    fams = {}
    for m, fs in sorted(en.families.items()):
        fams[str(m)] = [{"name": f.name, "fixed": list(f.fixed), "free_mu_min": f.free_lo,
                         "free_mu_max": f.free_hi} for f in fs]
    doc: dict[str, Any] = {
        "max_mu": args.max_mu,
        "families": fams,
        "configurations": [{"label": c.label(), "points": c.to_json(),
                            "weight": format_rat(config_weight(c)[0])} for c in en.configurations],
        "count": len(en.configurations),
    }
    if args.seven_targets:
        doc["seven_targets"] = [{"label": t.label, "method": t.method.value,
                                 "points": t.config.to_json()} for t in seven_targets()]
    _emit(stamp(doc, "enumeration"), args.out)
    return EXIT_OK


def cmd_orbifold(args: argparse.Namespace) -> int:
    ns = tuple(args.mult or ())
    if any(n < 2 for n in ns):
        raise InputError("multiplicities must be at least 2")
    orient = None if args.orientable is None else args.orientable == "yes"
    try:
        oc = orbifold_classify(args.base_chi, SeifertData(ns, tuple(f"n={n}" for n in ns)), orient)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(stamp({"base_chi": args.base_chi, "multiplicities": list(ns), **oc.to_json()}, "orbifold"),
          args.out)
    return EXIT_OK


def _target_for(conf: Configuration) -> Target | None:
    for t in seven_targets():
        if t.config.mus == conf.mus:
            return t
    return None


def cmd_smooth(args: argparse.Namespace) -> int:
    if args.curve:
        if not args.script:
            raise InputError("smoothing a curve needs --script")
        t, sign, name = curve_from_json(read_document(args.curve))
        a = _run_analysis(t, sign)
        block, code = _smoothing_block(a, script_from_json(read_document(args.script)))
        _emit(stamp({"curve": curve_to_json(t, sign, name), "smoothing": block}, "smoothing"), args.out)
        return code
    if args.config:
        conf = parse_config_label(args.config)
    elif args.config_file:
        conf = config_from_json(read_document(args.config_file))
    else:
        raise InputError("give a curve with --script, or --config / --config-file")
    if any(p.sign != "+" for p in conf.points):
        raise InputError("case tables are defined for A^+ configurations")
    lines = smoothing_case_table(conf)
    doc: dict[str, Any] = {"configuration": conf.label(), "case_table": [ln.to_json() for ln in lines]}
    code = EXIT_VERDICT if lines and all(not ln.admissible for ln in lines) else EXIT_OK
    target = _target_for(conf)
    if target is not None:
        rep = replay_exclusion(target)
        doc["replay"] = rep.to_json()
        code = EXIT_VERDICT if rep.excluded else EXIT_OK
    _emit(stamp(doc, "case_table"), args.out)
    return code


def cmd_verify_casebook(args: argparse.Namespace) -> int:
    from .casebook import run_casebook

    rep = run_casebook(seed=args.seed, samples=args.samples)
    _emit(stamp(rep.to_json(), "casebook"), args.out)
    sys.stderr.write(rep.summary() + "\n")
    return EXIT_OK if rep.passed else EXIT_CROSSCHECK


def cmd_plot(args: argparse.Namespace) -> int:
    from .plot import Window, render_svg

    t, sign, _ = _load_curve(args)
    if args.sign is not None:
        sign = args.sign
    win = None
    if args.window:
        try:
            win = Window(*args.window)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    svg = render_svg(t, sign, win)
    if args.svg:
        Path(args.svg).write_text(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="realdelpezzo",
                                description="Exact invariants of real double covers branched along trisections.")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized sampling")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="fibration, topology and invariants of one curve")
    a.add_argument("curve", nargs="?")
    a.add_argument("--random", action="store_true", help="analyze a random curve drawn from --seed")
    a.add_argument("--report", choices=REPORTS, default="all")
    a.add_argument("--sign", type=int, choices=(1, -1), help="override the cover sign")
    a.add_argument("--script", help="smoothing script to apply after the analysis")
    a.add_argument("--out")
    a.add_argument("--svg")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enumerate-configs", help="configurations allowed by the weight inequality")
    e.add_argument("--max-mu", type=int, default=8)
    e.add_argument("--seven-targets", action="store_true")
    e.add_argument("--out")
    e.set_defaults(func=cmd_enumerate)

    o = sub.add_parser("orbifold", help="orbifold Euler characteristic of a Seifert base")
    o.add_argument("--base-chi", type=int, required=True)
    o.add_argument("--mult", type=int, nargs="*", default=[])
    o.add_argument("--orientable", choices=("yes", "no"))
    o.add_argument("--out")
    o.set_defaults(func=cmd_orbifold)

    s = sub.add_parser("smooth", help="smoothing of a curve, or the case table of a configuration")
    s.add_argument("curve", nargs="?")
    s.add_argument("--script")
    s.add_argument("--config", help="label such as A3+2A2+A1")
    s.add_argument("--config-file")
    s.add_argument("--out")
    s.set_defaults(func=cmd_smooth)

    v = sub.add_parser("verify-casebook", help="replay every exact claim of the worked example")
    v.add_argument("--samples", type=int, default=100)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify_casebook)

    g = sub.add_parser("plot", help="SVG of the real curve with the positivity region")
    g.add_argument("curve", nargs="?")
    g.add_argument("--random", action="store_true")
    g.add_argument("--sign", type=int, choices=(1, -1))
    g.add_argument("--window", type=float, nargs=4, metavar=("X0", "X1", "Y0", "Y1"))
    g.add_argument("--svg")
    g.set_defaults(func=cmd_plot)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except CommandError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())


__all__ = ["SCHEMA_VERSION", "build_parser", "main"]
