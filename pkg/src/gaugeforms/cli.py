"""Scenario-driven command line front end.

Commands: check, validate, curvature, gauge, action.  Exit codes: 0 when
every must-pass check passes, 1 on any failure, 2 when the scenario itself
is invalid.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .poly import as_fraction, frac_str
from .genform import DerivativeContext
from .scenario import Report, Scenario, ScenarioError, load_scenario, run
from .checks import Env, run_check
from .rand import Rand
from . import gauge
from .serialize import avf_to_obj, form_to_obj, group_element_to_obj

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INVALID = 2


def _emit(obj, fmt: str, text: str | None = None):
    if fmt == "text" and text is not None:
        sys.stdout.write(text)
    else:
        sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _apply_overrides(scenario: Scenario, args) -> Scenario:
    if args.seed is not None:
        scenario.seed = args.seed
    if args.max_degree is not None:
        scenario.max_degree = args.max_degree
    if args.dim is not None:
        scenario.dim = args.dim
    if args.instances is not None:
        scenario.instances = args.instances
    ks = {}
    if args.k is not None:
        scenario.ctx = DerivativeContext(1, k=as_fraction(args.k))
    if args.k1 is not None or args.k2 is not None:
        old = scenario.ctx if scenario.ctx and scenario.ctx.n_type == 2 else None
        k1 = as_fraction(args.k1) if args.k1 is not None else (old.k1 if old else Fraction(0))
        k2 = as_fraction(args.k2) if args.k2 is not None else (old.k2 if old else Fraction(-1))
        scenario.ctx = DerivativeContext(2, k1=k1, k2=k2)
    return scenario


def _load(args) -> Scenario:
    scenario = load_scenario(args.scenario)
    return _apply_overrides(scenario, args)


def cmd_check(args) -> int:
    scenario = _load(args)
    report = run(scenario)
    _emit(report.to_obj(), args.format, report.to_text())
    return report.exit_code()


def cmd_validate(args) -> int:
    scenario = _load(args)
    scenario.checks = ["validate"]
    report = run(scenario)
    _emit(report.to_obj(), args.format, report.to_text())
    return report.exit_code()


def _drawn_connection(scenario: Scenario):
    env = scenario.env()
    rng = Rand(scenario.seed, scenario.max_degree, scenario.max_terms)
    if scenario.connection is not None:
        return scenario.connection, rng
    m = scenario.model
    if m.kind == "crossed":
        return rng.two_connection(m, scenario.dim), rng
    if m.kind == "two_crossed":
        return rng.three_connection(m, scenario.dim), rng
    return rng.avf(m.algebra, scenario.dim, 1), rng


def cmd_curvature(args) -> int:
    scenario = _load(args)
    m = scenario.model
    c, _ = _drawn_connection(scenario)
    if m.kind == "crossed":
        cur = gauge.curvature2(c)
        obj = {
            "model": m.name,
            "F": avf_to_obj(cur.F),
            "omega1": avf_to_obj(cur.omega1),
            "omega2": avf_to_obj(cur.omega2),
        }
    elif m.kind == "two_crossed":
        cur = gauge.curvature3(c)
        obj = {
            "model": m.name,
            "F": avf_to_obj(cur.F),
            "omega1": avf_to_obj(cur.omega1),
            "omega2": avf_to_obj(cur.omega2),
            "omega3": avf_to_obj(cur.omega3),
        }
    else:
        from .algebra import bracket
        F = c.d() + bracket(c, c).scale(Fraction(1, 2))
        obj = {"model": m.name, "F": avf_to_obj(F)}
    lines = [f"curvature components over model {m.name}"]
    for key in obj:
        if key != "model":
            lines.append(f"  {key}: computed")
    _emit(obj, args.format, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_gauge(args) -> int:
    scenario = _load(args)
    m = scenario.model
    if m.kind == "lie" or m.group is None:
        sys.stderr.write("gauge command needs a model with a group realization\n")
        return EXIT_INVALID
    c, rng = _drawn_connection(scenario)
    if m.kind == "crossed":
        G = rng.group1(m, scenario.dim)
        ctx = scenario.ctx if scenario.ctx and scenario.ctx.n_type == 1 \
            else DerivativeContext(1, k=Fraction(-1))
        ct = gauge.gauge_transform2(c, G, ctx)
        two_path = gauge.gauge_transform2_generalized(c, G, ctx)
        agree = (ct.A - two_path.A).is_zero() and (ct.B - two_path.B).is_zero()
        obj = {
            "model": m.name,
            "element": group_element_to_obj(G),
            "transformed": {"A": avf_to_obj(ct.A), "B": avf_to_obj(ct.B)},
            "two_path_agreement": agree,
        }
    else:
        G = rng.group2(m, scenario.dim)
        ct = gauge.gauge_transform3(c, G)
        two_path = gauge.gauge_transform3_generalized(c, G)
        agree = ((ct.A - two_path.A).is_zero() and (ct.B - two_path.B).is_zero()
                 and (ct.C - two_path.C).is_zero())
        obj = {
            "model": m.name,
            "element": group_element_to_obj(G),
            "transformed": {"A": avf_to_obj(ct.A), "B": avf_to_obj(ct.B),
                            "C": avf_to_obj(ct.C)},
            "two_path_agreement": agree,
        }
    text = (f"gauge transformation over model {m.name}\n"
            f"  two-path agreement: {agree}\n")
    _emit(obj, args.format, text)
    return EXIT_OK if agree else EXIT_FAIL


def cmd_action(args) -> int:
    scenario = _load(args)
    m = scenario.model
    kind = args.kind
    c, _ = _drawn_connection(scenario)
    residuals = []
    try:
        if kind == "ym":
            if m.kind != "lie":
                raise ValueError("ym needs a plain Lie model")
            value = gauge.action_ym(m.algebra, c, m.pairing)
        elif kind == "2cs":
            if m.kind != "crossed" or scenario.dim != 4:
                raise ValueError("2cs needs a crossed module on a dim-4 chart")
            value = gauge.action_2cs(c, m.pairing)
        elif kind == "2ym":
            if m.kind != "crossed":
                raise ValueError("2ym needs a crossed module")
            value = gauge.action_2ym(c, m.pairing)
        elif kind == "3cs":
            if m.kind != "two_crossed" or scenario.dim != 5:
                raise ValueError("3cs needs a 2-crossed module on a dim-5 chart")
            value = gauge.action_3cs(c, m.pairing)
        elif kind == "3ym":
            if m.kind != "two_crossed":
                raise ValueError("3ym needs a 2-crossed module")
            value = gauge.action_3ym(c, m.pairing)
        else:
            raise ValueError(f"unknown action kind {kind}")
    except ValueError as exc:
        sys.stderr.write(f"action error: {exc}\n")
        return EXIT_INVALID
    obj = {"kind": kind, "value": frac_str(value), "residuals": residuals}
    _emit(obj, args.format, f"S_{kind} = {frac_str(value)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaugeforms",
        description="exact checks and functionals for generalized-form gauge theory")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("scenario", help="path to a scenario JSON file")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--max-degree", type=int, default=None, dest="max_degree")
        p.add_argument("--dim", type=int, default=None)
        p.add_argument("--instances", type=int, default=None)
        p.add_argument("--k", default=None, help="type N=1 derivative constant")
        p.add_argument("--k1", default=None)
        p.add_argument("--k2", default=None)
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("check", help="run the scenario's checks")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("validate", help="run only the algebra/pairing validators")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("curvature", help="compute curvature components")
    common(p)
    p.set_defaults(func=cmd_curvature)

    p = sub.add_parser("gauge", help="apply a random gauge transformation")
    common(p)
    p.set_defaults(func=cmd_gauge)

    p = sub.add_parser("action", help="evaluate an action functional")
    common(p)
    p.add_argument("--kind", choices=("2cs", "3cs", "ym", "2ym", "3ym"), required=True)
    p.set_defaults(func=cmd_action)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ScenarioError as exc:
        for e in exc.errors:
            sys.stderr.write(f"scenario error: {e}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
