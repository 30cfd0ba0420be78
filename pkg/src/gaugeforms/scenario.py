"""Scenario files: declarative descriptions of what to verify.

A scenario is a JSON document naming a chart dimension, a derivative
context, an algebra (builtin by name, or inline structure-constant data),
optional explicit field content, an rng block, and the list of checks to
run.  Reports are deterministic: identical scenario + seed give
byte-identical structured output (wall-clock timings appear only in the
text rendering).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .poly import as_fraction, frac_str
from .algebra import PairingData
from .genform import DerivativeContext
from .models import Model, builtin, builtin_names
from .serialize import (
    avf_from_obj,
    crossed_from_obj,
    form_from_obj,
    lie_algebra_from_obj,
    pairing_from_obj,
    two_crossed_from_obj,
)
from .checks import CHECKS, Env, CheckResult, run_check


class ScenarioError(Exception):
    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


@dataclass
class Scenario:
    name: str
    dim: int
    ctx: DerivativeContext | None
    model: Model
    checks: list
    seed: int = 1
    max_degree: int = 2
    max_terms: int = 2
    instances: int = 5
    connection: object = None
    raw: dict = field(default_factory=dict)

    def env(self) -> Env:
        return Env(model=self.model, dim=self.dim, ctx=self.ctx, seed=self.seed,
                   instances=self.instances, max_degree=self.max_degree,
                   max_terms=self.max_terms, connection=self.connection)


def _load_model(obj, errors) -> Model | None:
    if not isinstance(obj, dict):
        errors.append("algebra section must be an object")
        return None
    if "builtin" in obj:
        name = obj["builtin"]
        try:
            return builtin(name)
        except KeyError:
            errors.append(f"unknown builtin model {name!r} "
                          f"(known: {', '.join(builtin_names())})")
            return None
    kind = obj.get("kind")
    try:
        pairing = pairing_from_obj(obj.get("pairings", {}) or {})
        if kind == "lie":
            return Model(obj.get("name", "custom"), "lie",
                         algebra=lie_algebra_from_obj(obj), pairing=pairing)
        if kind == "crossed":
            return Model(obj.get("name", "custom"), "crossed",
                         cm=crossed_from_obj(obj), pairing=pairing)
        if kind == "two_crossed":
            return Model(obj.get("name", "custom"), "two_crossed",
                         tcm=two_crossed_from_obj(obj), pairing=pairing)
    except (KeyError, ValueError, TypeError) as exc:
        errors.append(f"bad inline algebra data: {exc}")
        return None
    errors.append("algebra section needs 'builtin' or kind in (lie, crossed, two_crossed)")
    return None


def _load_context(obj, errors) -> DerivativeContext | None:
    if obj is None:
        return None
    try:
        n_type = int(obj.get("n_type", 1))
        if n_type == 1:
            return DerivativeContext(1, k=as_fraction(obj.get("k", "-1/1")))
        if n_type == 2:
            return DerivativeContext(2, k1=as_fraction(obj.get("k1", "0/1")),
                                     k2=as_fraction(obj.get("k2", "-1/1")))
        if n_type == 0:
            return DerivativeContext(0)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        errors.append(f"bad context: {exc}")
        return None
    errors.append(f"bad context type {obj.get('n_type')!r}")
    return None


def _load_connection(obj, model: Model, dim: int, errors):
    if obj in (None, "random"):
        return None
    from .gauge import ThreeConnection, TwoConnection

    def load_slot(key, algebra, degree):
        sub = obj.get(key)
        if sub is None:
            errors.append(f"connection is missing slot {key!r}")
            return None
        try:
            a = avf_from_obj(sub, algebra)
        except (KeyError, ValueError, TypeError, IndexError) as exc:
            errors.append(f"bad form in slot {key!r}: {exc}")
            return None
        if a.degree != degree:
            errors.append(f"slot {key!r} must have degree {degree}, got {a.degree}")
        if a.degree > dim:
            errors.append(f"slot {key!r} degree {a.degree} exceeds chart dimension {dim}")
        if a.dim != dim:
            errors.append(f"slot {key!r} lives on a dim-{a.dim} chart, scenario is dim {dim}")
        return a

    if model.kind == "crossed":
        A = load_slot("A", model.cm.g, 1)
        B = load_slot("B", model.cm.h, 2)
        if errors or A is None or B is None:
            return None
        return TwoConnection(model.cm, A, B)
    if model.kind == "two_crossed":
        A = load_slot("A", model.tcm.g, 1)
        B = load_slot("B", model.tcm.h, 2)
        C = load_slot("C", model.tcm.l, 3)
        if errors or A is None or B is None or C is None:
            return None
        return ThreeConnection(model.tcm, A, B, C)
    return load_slot("A", model.algebra, 1)


def load_scenario(source) -> Scenario:
    """Parse and validate a scenario from a path, JSON string or dict."""
    if isinstance(source, (str, Path)) and not str(source).lstrip().startswith("{"):
        path = Path(source)
        if not path.exists():
            raise ScenarioError([f"scenario file not found: {path}"])
        try:
            raw = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise ScenarioError([f"scenario does not parse: {exc}"])
        name = raw.get("name", path.stem)
    elif isinstance(source, str):
        try:
            raw = json.loads(source)
        except json.JSONDecodeError as exc:
            raise ScenarioError([f"scenario does not parse: {exc}"])
        name = raw.get("name", "inline")
    else:
        raw = dict(source)
        name = raw.get("name", "inline")

    errors: list = []
    chart = raw.get("chart", {})
    dim = chart.get("dim")
    if not isinstance(dim, int) or dim < 1:
        errors.append("chart.dim must be a positive integer")
        dim = 1
    ctx = _load_context(raw.get("context"), errors)
    model = _load_model(raw.get("algebra", {}), errors)

    checks = raw.get("checks", [])
    if not isinstance(checks, list) or not checks:
        errors.append("checks must be a nonempty list")
        checks = []
    for c in checks:
        if c not in CHECKS:
            errors.append(f"unknown check {c!r} (known: {', '.join(sorted(CHECKS))})")

    rng = raw.get("rng", {})
    seed = int(rng.get("seed", 1))
    max_degree = int(rng.get("max_poly_degree", 2))
    max_terms = int(rng.get("max_terms", 2))
    instances = int(raw.get("instances", 5))

    connection = None
    if model is not None:
        fields = raw.get("fields", {})
        connection = _load_connection(fields.get("connection"), model, dim, errors)

    if errors:
        raise ScenarioError(errors)
    return Scenario(name=name, dim=dim, ctx=ctx, model=model, checks=checks,
                    seed=seed, max_degree=max_degree, max_terms=max_terms,
                    instances=instances, connection=connection, raw=raw)


# -- reports -------------------------------------------------------------------

@dataclass
class Report:
    scenario: str
    seed: int
    model: str
    dim: int
    results: list

    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "reported": 0, "info": 0, "skipped": 0}
        for r in self.results:
            counts[r.status] = counts.get(r.status, 0) + 1
        return counts

    def exit_code(self) -> int:
        return 1 if any(r.failed() for r in self.results) else 0

    def to_obj(self) -> dict:
        """Deterministic structured report (no wall-clock content)."""
        return {
            "scenario": self.scenario,
            "seed": self.seed,
            "model": self.model,
            "dim": self.dim,
            "checks": [
                {
                    "name": r.name,
                    "severity": r.severity,
                    "status": r.status,
                    "details": r.details,
                }
                for r in self.results
            ],
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"scenario {self.scenario} (model {self.model}, dim {self.dim}, "
                 f"seed {self.seed})"]
        for r in self.results:
            lines.append(f"  [{r.status:>8}] {r.name:<18} ({r.severity}) "
                         f"{r.elapsed*1000:7.1f} ms")
            for k in sorted(r.details):
                lines.append(f"             {k}: {r.details[k]}")
        s = self.summary()
        lines.append("  " + ", ".join(f"{k}={v}" for k, v in sorted(s.items()) if v))
        return "\n".join(lines) + "\n"


def report_from_obj(obj) -> Report:
    results = [
        CheckResult(c["name"], c["severity"], c["status"], c["details"])
        for c in obj["checks"]
    ]
    return Report(obj["scenario"], obj["seed"], obj["model"], obj["dim"], results)


def run(scenario: Scenario) -> Report:
    env = scenario.env()
    results = [run_check(name, env) for name in scenario.checks]
    return Report(scenario.name, scenario.seed, scenario.model.name,
                  scenario.dim, results)
