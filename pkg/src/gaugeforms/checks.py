"""Named verification suites over a model, chart and derivative context.

Every check exposed by the CLI wraps invariants of the core modules; there
is no CLI-only mathematics here.  Checks come in three severities:

* must_pass  -- exact theorems; any nonzero residual is a failure;
* reported   -- identities whose hypotheses are ambiguous or violated
                (non-fine Maurer-Cartan, k1 != k2, the published boundary
                term of the 2CS gauge variation); residuals are recorded;
* info       -- values (action functionals), never failing.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .poly import frac_str
from .forms import OrdinaryForm
from .algebra import (
    act,
    apply_alpha,
    apply_beta,
    apply_linear,
    bracket,
    pair_forms,
    peiffer,
    validate_crossed_module,
    validate_lie_algebra,
    validate_pairings,
    validate_two_crossed_module,
)
from .genform import (
    CTX_CONNECTION_1,
    CTX_CONNECTION_2,
    DerivativeContext,
    GeneralizedForm,
    gbracket,
    gderiv,
    ginner,
    gpairing,
    gwedge,
    join,
    split,
)
from .group import GroupValuedZeroForm, adjoint, mc_residual
from . import gauge
from .rand import Rand

MUST_PASS = "must_pass"
REPORTED = "reported"
INFO = "info"


@dataclass
class CheckResult:
    name: str
    severity: str
    status: str                    # pass | fail | reported | info | skipped
    details: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def failed(self) -> bool:
        return self.severity == MUST_PASS and self.status == "fail"


@dataclass
class Env:
    model: object                   # models.Model
    dim: int
    ctx: DerivativeContext | None
    seed: int
    instances: int = 5
    max_degree: int = 2
    max_terms: int = 2
    connection: object = None       # explicit TwoConnection/ThreeConnection/AVF

    def rand(self, salt: int = 0) -> Rand:
        return Rand(self.seed + 1009 * salt, self.max_degree, self.max_terms)


def _zero_summary(values) -> dict:
    bad = [v for v in values if not v.is_zero()]
    return {"instances": len(values), "nonzero": len(bad)}


def _residual_text(forms) -> str:
    """Deterministic one-line description of the first nonzero residual."""
    for f in forms:
        if isinstance(f, GeneralizedForm):
            for label, slot in zip(("U", "V", "V'", "W"), f.slots):
                if not slot.is_zero():
                    return f"slot {label}: " + _residual_text([slot])
        elif hasattr(f, "comps") and hasattr(f, "algebra"):
            for a, c in enumerate(f.comps):
                if not c.is_zero():
                    return f"basis {f.algebra.basis[a]}: " + repr(c)
        elif isinstance(f, OrdinaryForm):
            if not f.is_zero():
                return repr(f)
    return "0"


def _connection_for(env: Env, rng: Rand, dense: bool = False):
    if env.connection is not None:
        return env.connection
    kw = {"sparse": False, "n_comps": 2} if dense else {}
    if env.model.kind == "crossed":
        return rng.two_connection(env.model, env.dim, **kw)
    if env.model.kind == "two_crossed":
        return rng.three_connection(env.model, env.dim, **kw)
    return rng.avf(env.model.algebra, env.dim, 1, **kw)


# -- individual checks ------------------------------------------------------------


def check_validate(env: Env) -> CheckResult:
    m = env.model
    reports = []
    if m.kind == "lie":
        reports.append(validate_lie_algebra(m.algebra))
    elif m.kind == "crossed":
        reports.append(validate_crossed_module(m.cm))
    else:
        reports.append(validate_two_crossed_module(m.tcm))
    if m.pairing is not None and m.kind != "lie":
        reports.append(validate_pairings(m.pairing, m.module))
    group_bad = []
    if m.group is not None and m.kind != "lie":
        group_bad = _group_identity_residuals(env)
    violations = [str(v) for rep in reports for v in rep.violations]
    ok = not violations and not group_bad
    return CheckResult("validate", MUST_PASS, "pass" if ok else "fail",
                       {"violations": violations + group_bad})


def _group_identity_residuals(env: Env) -> list:
    """Mixed group/algebra relations for the matrix realization, on random data."""
    m = env.model
    rng = env.rand(17)
    mod = m.module
    bad = []
    for i in range(max(2, env.instances // 2)):
        if m.kind == "crossed":
            G1 = rng.group1(m, env.dim)
            G2 = rng.group1(m, env.dim)
        else:
            G1 = rng.group2(m, env.dim)
            G2 = rng.group2(m, env.dim)
        X = rng.avf(mod.g, env.dim, 1)
        Y = rng.avf(mod.h, env.dim, 1)
        G12 = G1.compose(G2)
        # (g1 g2) |> Y = g1 |> (g2 |> Y)
        if not (G12.act_g(Y) - G1.act_g(G2.act_g(Y))).is_zero():
            bad.append(f"group_action_composition_h[{i}]")
        # g |> (X |> Y) = (Ad_g X) |> (g |> Y)
        if not (G1.act_g(act(mod, X, Y)) - act(mod, G1.ad_g(X), G1.act_g(Y))).is_zero():
            bad.append(f"group_action_compatibility_h[{i}]")
        # alpha(g |> Y) = Ad_g alpha(Y)
        alpha = mod.alpha
        lhs = apply_linear(alpha, G1.act_g(Y), mod.g)
        if not (lhs - G1.ad_g(apply_linear(alpha, Y, mod.g))).is_zero():
            bad.append(f"group_alpha_equivariance[{i}]")
        if m.kind == "two_crossed":
            Z = rng.avf(mod.l, env.dim, 1)
            if not (G12.act_g(Z) - G1.act_g(G2.act_g(Z))).is_zero():
                bad.append(f"group_action_composition_l[{i}]")
            if not (G1.act_g(act(mod, X, Z)) - act(mod, G1.ad_g(X), G1.act_g(Z))).is_zero():
                bad.append(f"group_action_compatibility_l[{i}]")
            # beta(g |> Z) = g |> beta(Z)
            if not (apply_beta(mod, G1.act_g(Z)) - G1.act_g(apply_beta(mod, Z))).is_zero():
                bad.append(f"group_beta_equivariance[{i}]")
            # g |> {Y1, Y2} = {g |> Y1, g |> Y2}
            Y2 = rng.avf(mod.h, env.dim, 1)
            if not (G1.act_g(peiffer(mod, Y, Y2))
                    - peiffer(mod, G1.act_g(Y), G1.act_g(Y2))).is_zero():
                bad.append(f"group_peiffer_equivariance[{i}]")
    return bad


def check_exterior(env: Env) -> CheckResult:
    rng = env.rand(1)
    n = env.dim
    bad = 0
    pos_fail = 0
    for _ in range(env.instances):
        p = rng.r.randint(0, min(3, n))
        q = rng.r.randint(0, min(3, n))
        a = rng.form(n, p)
        b = rng.form(n, q)
        s = -1 if (p * q) & 1 else 1
        if not (a.wedge(b) - b.wedge(a).scale(s)).is_zero():
            bad += 1
        if not a.d().d().is_zero():
            bad += 1
        sp = -1 if p & 1 else 1
        if not (a.wedge(b).d() - a.d().wedge(b) - a.wedge(b.d()).scale(sp)).is_zero():
            bad += 1
        ss = -1 if (p * (n - p)) & 1 else 1
        if not (a.hodge().hodge() - a.scale(ss)).is_zero():
            bad += 1
        b2 = rng.form(n, p)
        if a.inner(b2) != b2.inner(a):
            bad += 1
        if not a.is_zero() and not a.inner(a) > 0:
            pos_fail += 1
    ok = bad == 0 and pos_fail == 0
    return CheckResult("exterior", MUST_PASS, "pass" if ok else "fail",
                       {"instances": env.instances, "violations": bad + pos_fail})


def check_genform(env: Env) -> CheckResult:
    rng = env.rand(2)
    n = env.dim
    bad = 0
    for _ in range(env.instances):
        for n_type in (1, 2):
            ctx = rng.context(n_type)
            p = rng.r.randint(0, 2)
            w = rng.generalized(n_type, n, p)
            if not gderiv(gderiv(w, ctx), ctx).is_zero():
                bad += 1
            q = rng.r.randint(0, 2)
            w2 = rng.generalized(n_type, n, q)
            s = -1 if (p * q) & 1 else 1
            if not (gwedge(w, w2) - gwedge(w2, w).scale(s)).is_zero():
                bad += 1
            w3 = rng.generalized(n_type, n, 1)
            if not (gwedge(gwedge(w, w2), w3) - gwedge(w, gwedge(w2, w3))).is_zero():
                bad += 1
            a, b = split(w)
            if not (join(a, b) - w).is_zero():
                bad += 1
            # Leibniz for the generalized product
            sp = -1 if p & 1 else 1
            lhs = gderiv(gwedge(w, w2), ctx)
            rhs = gwedge(gderiv(w, ctx), w2) + gwedge(w, gderiv(w2, ctx)).scale(sp)
            if not (lhs - rhs).is_zero():
                bad += 1
    return CheckResult("genform", MUST_PASS, "pass" if bad == 0 else "fail",
                       {"instances": env.instances, "violations": bad})


def check_dgla(env: Env) -> CheckResult:
    m = env.model
    if m.kind == "lie":
        return CheckResult("dgla", MUST_PASS, "skipped",
                           {"reason": "needs a crossed or 2-crossed module"})
    rng = env.rand(3)
    n = env.dim
    bad = 0
    make = (lambda p: rng.generalized_lie2(m.cm, n, p)) if m.kind == "crossed" \
        else (lambda p: rng.generalized_lie3(m.tcm, n, p))
    n_type = 1 if m.kind == "crossed" else 2
    for _ in range(env.instances):
        ctx = rng.context(n_type)
        p, q, r = (rng.r.randint(0, 2) for _ in range(3))
        w1, w2, w3 = make(p), make(q), make(r)
        s = -1 if (p * q) & 1 else 1
        if not (gbracket(w1, w2) + gbracket(w2, w1).scale(s)).is_zero():
            bad += 1
        jac = (gbracket(w1, gbracket(w2, w3)) - gbracket(gbracket(w1, w2), w3)
               - gbracket(w2, gbracket(w1, w3)).scale(s))
        if not jac.is_zero():
            bad += 1
        sp = -1 if p & 1 else 1
        lei = (gderiv(gbracket(w1, w2), ctx) - gbracket(gderiv(w1, ctx), w2)
               - gbracket(w1, gderiv(w2, ctx)).scale(sp))
        if not lei.is_zero():
            bad += 1
        if not gderiv(gderiv(w1, ctx), ctx).is_zero():
            bad += 1
    return CheckResult("dgla", MUST_PASS, "pass" if bad == 0 else "fail",
                       {"instances": env.instances, "violations": bad})


def check_bianchi(env: Env) -> CheckResult:
    m = env.model
    if m.kind == "lie":
        return CheckResult("bianchi", MUST_PASS, "skipped",
                           {"reason": "needs a crossed or 2-crossed module"})
    rng = env.rand(4)
    bad = 0
    ctx = CTX_CONNECTION_1 if m.kind == "crossed" else CTX_CONNECTION_2
    for _ in range(env.instances):
        c = _connection_for(env, rng)
        for r in gauge.bianchi_residual(c):
            if not r.is_zero():
                bad += 1
        a = gauge.as_generalized(c)
        if not gauge.generalized_bianchi_residual(a, ctx).is_zero():
            bad += 1
        # slot agreement between the generalized and component curvatures
        f = gauge.generalized_curvature(a, ctx)
        if m.kind == "crossed":
            cur = gauge.curvature2(c)
            slots = (cur.omega1, cur.omega2)
        else:
            cur = gauge.curvature3(c)
            slots = (cur.omega1, cur.omega2,
                     cur.omega2 + apply_beta(m.tcm, c.C), cur.omega3)
        for s, t in zip(f.slots, slots):
            if not (s - t).is_zero():
                bad += 1
    return CheckResult("bianchi", MUST_PASS, "pass" if bad == 0 else "fail",
                       {"instances": env.instances, "violations": bad})


def check_mc(env: Env) -> CheckResult:
    m = env.model
    if m.kind == "lie" or m.group is None:
        return CheckResult("mc", MUST_PASS, "skipped",
                           {"reason": "needs a group realization"})
    rng = env.rand(5)
    residuals = []
    if m.kind == "crossed":
        for _ in range(env.instances):
            G = rng.group1(m, env.dim)
            residuals.append(mc_residual(G, rng.context(1)))
        summary = _zero_summary(residuals)
        ok = summary["nonzero"] == 0
        return CheckResult("mc", MUST_PASS, "pass" if ok else "fail", summary)
    ctx = env.ctx if env.ctx and env.ctx.n_type == 2 else rng.context(2, equal_k=True)
    for _ in range(env.instances):
        G = rng.group2(m, env.dim)
        residuals.append(mc_residual(G, ctx))
    summary = _zero_summary(residuals)
    summary["k1"] = frac_str(ctx.k1)
    summary["k2"] = frac_str(ctx.k2)
    summary["fine"] = m.tcm.fine
    hypotheses = ctx.k1 == ctx.k2 and m.tcm.fine
    if hypotheses:
        ok = summary["nonzero"] == 0
        return CheckResult("mc", MUST_PASS, "pass" if ok else "fail", summary)
    summary["residual"] = _residual_text(residuals)
    return CheckResult("mc", REPORTED, "reported", summary)


def check_gauge_covariance(env: Env) -> CheckResult:
    m = env.model
    if m.kind == "lie" or m.group is None:
        return CheckResult("gauge_covariance", MUST_PASS, "skipped",
                           {"reason": "needs a group realization"})
    rng = env.rand(6)
    bad = 0
    for _ in range(env.instances):
        if m.kind == "crossed":
            c = _connection_for(env, rng)
            G = rng.group1(m, env.dim)
            ctx = rng.context(1)
            c1 = gauge.gauge_transform2(c, G, ctx)
            c2 = gauge.gauge_transform2_generalized(c, G, ctx)
            if not ((c1.A - c2.A).is_zero() and (c1.B - c2.B).is_zero()):
                bad += 1
            c3 = gauge.gauge_transform2(c, G, CTX_CONNECTION_1)
            c4 = gauge.gauge_transform2_primed(c, G.inverse())
            if not ((c3.A - c4.A).is_zero() and (c3.B - c4.B).is_zero()):
                bad += 1
            cur_t = gauge.curvature_transform2(gauge.curvature2(c), G)
            cur_d = gauge.curvature2(c3)
            if not ((cur_d.omega1 - cur_t.omega1).is_zero()
                    and (cur_d.omega2 - cur_t.omega2).is_zero()):
                bad += 1
            ff = gauge.generalized_curvature(gauge.as_generalized(c), CTX_CONNECTION_1)
            ff2 = gauge.generalized_curvature(gauge.as_generalized(c3), CTX_CONNECTION_1)
            if not (ff2 - adjoint(G.inverse(), ff)).is_zero():
                bad += 1
        else:
            c = _connection_for(env, rng)
            G = rng.group2(m, env.dim)
            c1 = gauge.gauge_transform3(c, G)
            c2 = gauge.gauge_transform3_generalized(c, G)
            if not ((c1.A - c2.A).is_zero() and (c1.B - c2.B).is_zero()
                    and (c1.C - c2.C).is_zero()):
                bad += 1
    return CheckResult("gauge_covariance", MUST_PASS, "pass" if bad == 0 else "fail",
                       {"instances": env.instances, "violations": bad})


def check_chern_weil_2(env: Env) -> CheckResult:
    m = env.model
    if m.kind != "crossed" or m.pairing is None or m.pairing.pairing_gh is None:
        return CheckResult("chern_weil_2", MUST_PASS, "skipped",
                           {"reason": "needs a crossed module with pairing_gh"})
    rng = env.rand(7)
    bad = 0
    nonzero = 0
    for _ in range(env.instances):
        c = _connection_for(env, rng, dense=True)
        comp = gauge.cs4(c, m.pairing)
        gen = gauge.cs4_generalized(c, m.pairing)
        if not (comp - gen).is_zero():
            bad += 1
        p5 = gauge.chern5(gauge.curvature2(c), m.pairing)
        if not (comp.d() - p5).is_zero():
            bad += 1
        nonzero += not p5.is_zero()
    details = {"instances": env.instances, "violations": bad, "nonzero_chern": nonzero}
    if env.dim < 5:
        details["note"] = "5-forms vanish identically below dimension 5"
    return CheckResult("chern_weil_2", MUST_PASS, "pass" if bad == 0 else "fail", details)


def check_chern_weil_3(env: Env) -> CheckResult:
    m = env.model
    if m.kind != "two_crossed" or m.pairing is None or m.pairing.pairing_gl is None:
        return CheckResult("chern_weil_3", MUST_PASS, "skipped",
                           {"reason": "needs a 2-crossed module with invariant pairings"})
    rng = env.rand(8)
    bad = 0
    nonzero = 0
    for _ in range(env.instances):
        c = _connection_for(env, rng, dense=True)
        comp = gauge.cs5(c, m.pairing)
        gen = gauge.cs5_generalized(c, m.pairing)
        if not (comp - gen).is_zero():
            bad += 1
        p6 = gauge.chern6(gauge.curvature3(c), m.pairing)
        if not (comp.d() - p6).is_zero():
            bad += 1
        nonzero += not p6.is_zero()
    details = {"instances": env.instances, "violations": bad, "nonzero_chern": nonzero}
    if env.dim < 6:
        details["note"] = "6-forms vanish identically below dimension 6"
    return CheckResult("chern_weil_3", MUST_PASS, "pass" if bad == 0 else "fail", details)


def check_cs4_boundary(env: Env) -> CheckResult:
    m = env.model
    if (m.kind != "crossed" or m.pairing is None or m.pairing.pairing_gh is None
            or m.group is None):
        return CheckResult("cs4_boundary", MUST_PASS, "skipped",
                           {"reason": "needs a crossed module with pairing and group"})
    rng = env.rand(9)
    bad = 0
    residuals = []
    for _ in range(env.instances):
        c = _connection_for(env, rng, dense=True)
        G = rng.group1(m, env.dim, max_degree=1)
        diff, boundary, residual = gauge.cs4_gauge_boundary(c, G, m.pairing)
        if not diff.d().is_zero():
            bad += 1
        residuals.append(residual)
    summary = _zero_summary(residuals)
    details = {"instances": env.instances, "closedness_violations": bad,
               "boundary_match_nonzero": summary["nonzero"],
               "boundary_residual": _residual_text(residuals)}
    status = "pass" if bad == 0 else "fail"
    return CheckResult("cs4_boundary", MUST_PASS, status, details)


def check_actions(env: Env) -> CheckResult:
    m = env.model
    rng = env.rand(10)
    values = {}
    if m.kind == "lie":
        A = _connection_for(env, rng)
        values["ym"] = frac_str(gauge.action_ym(m.algebra, A, m.pairing))
    elif m.kind == "crossed":
        c = _connection_for(env, rng)
        values["2ym"] = frac_str(gauge.action_2ym(c, m.pairing))
        if env.dim == 4 and m.pairing.pairing_gh is not None:
            values["2cs"] = frac_str(gauge.action_2cs(c, m.pairing))
    else:
        c = _connection_for(env, rng)
        values["3ym"] = frac_str(gauge.action_3ym(c, m.pairing))
        if env.dim == 5 and m.pairing.pairing_gl is not None:
            values["3cs"] = frac_str(gauge.action_3cs(c, m.pairing))
    return CheckResult("actions", INFO, "info", {"values": values})


def check_plain(env: Env) -> CheckResult:
    """Matrix picture: curvature displays, covariant-derivative Bianchi,
    and the published gauge transformation slot formulas."""
    rng = env.rand(11)
    dim, r = env.dim, 3
    bad = 0

    def up(degree, **kw):
        return rng.matrix_form(r, dim, degree, strictly_upper=True, **kw)

    for _ in range(env.instances):
        ctx1 = rng.context(1)
        k = ctx1.k
        A1, A2 = up(1), up(2)
        a = gauge.plain_connection1(A1, A2)
        f = gauge.generalized_curvature(a, ctx1)
        c0 = A1.d() + A1.matmul(A1) + A2.scale(k)
        c1 = A2.d() + A1.commutator(A2)
        if not ((f.slots[0] - c0).is_zero() and (f.slots[1] - c1).is_zero()):
            bad += 1
        if not gauge.plain_covariant_derivative(a, f, ctx1).is_zero():
            bad += 1
        pi = rng.unipotent(r, dim, max_degree=1)
        mu = up(1, max_degree=1)
        e = gauge.plain_element1(pi, mu)
        at = gauge.plain_gauge_transform(a, e, ctx1)
        piinv = pi.inverse()
        sw = lambda x: piinv.mat.matmul(x).matmul(pi.mat)
        d0 = piinv.mat.matmul(pi.d()) + sw(A1 - mu.scale(k))
        d1 = sw(mu.d() - mu.matmul(mu).scale(k) + mu.matmul(A1) + A1.matmul(mu) + A2)
        if not ((at.slots[0] - d0).is_zero() and (at.slots[1] - d1).is_zero()):
            bad += 1
        ctx2 = rng.context(2)
        k1, k2 = ctx2.k1, ctx2.k2
        B1, B2, B2p, B3 = up(1), up(2), up(2), up(3)
        b = gauge.plain_connection2(B1, B2, B2p, B3)
        fb = gauge.generalized_curvature(b, ctx2)
        e0 = B1.d() + B1.matmul(B1) + B2.scale(k1) + B2p.scale(k2)
        e1 = B2.d() + B1.commutator(B2) + B3.scale(k2)
        e2 = B2p.d() + B1.commutator(B2p) - B3.scale(k1)
        e3 = B3.d() + B1.commutator(B3) + B2.commutator(B2p)
        for s, cslot in zip(fb.slots, (e0, e1, e2, e3)):
            if not (s - cslot).is_zero():
                bad += 1
        if not gauge.plain_covariant_derivative(b, fb, ctx2).is_zero():
            bad += 1
    return CheckResult("plain", MUST_PASS, "pass" if bad == 0 else "fail",
                       {"instances": env.instances, "violations": bad})


CHECKS = {
    "validate": check_validate,
    "exterior": check_exterior,
    "genform": check_genform,
    "dgla": check_dgla,
    "bianchi": check_bianchi,
    "mc": check_mc,
    "gauge_covariance": check_gauge_covariance,
    "chern_weil_2": check_chern_weil_2,
    "chern_weil_3": check_chern_weil_3,
    "cs4_boundary": check_cs4_boundary,
    "actions": check_actions,
    "plain": check_plain,
}


def run_check(name: str, env: Env) -> CheckResult:
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}; known: {', '.join(sorted(CHECKS))}")
    t0 = time.perf_counter()
    result = CHECKS[name](env)
    result.elapsed = time.perf_counter() - t0
    return result
