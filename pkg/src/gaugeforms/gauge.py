"""Higher connections, curvatures, gauge transformations and functionals.

Covers the 2-/3-connection calculus (fake curvatures, Bianchi residuals,
gauge transformations in both published component forms), the plain
matrix-Lie-algebra picture of generalized connections, and the functionals:
the 4-form/5-form Chern-Simons densities with their Chern-Weil relations,
and the Yang-Mills-type actions evaluated exactly over the unit cube.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .forms import OrdinaryForm
from .algebra import (
    AlgebraValuedForm,
    CrossedModuleData,
    PairingData,
    TwoCrossedModuleData,
    act,
    act_prime,
    apply_alpha,
    apply_beta,
    apply_linear,
    bracket,
    inner_sym,
    pair_forms,
    peiffer,
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
)
from .group import GroupValuedZeroForm, mc2, mc3, _half_square_h

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


# -- connections and curvatures ------------------------------------------------

@dataclass
class TwoConnection:
    cm: CrossedModuleData
    A: AlgebraValuedForm      # g-valued 1-form
    B: AlgebraValuedForm      # h-valued 2-form

    def __post_init__(self):
        if self.A.algebra is not self.cm.g or self.A.degree != 1:
            raise ValueError("A must be a g-valued 1-form")
        if self.B.algebra is not self.cm.h or self.B.degree != 2:
            raise ValueError("B must be an h-valued 2-form")


@dataclass
class ThreeConnection:
    tcm: TwoCrossedModuleData
    A: AlgebraValuedForm      # g-valued 1-form
    B: AlgebraValuedForm      # h-valued 2-form
    C: AlgebraValuedForm      # l-valued 3-form

    def __post_init__(self):
        if self.A.algebra is not self.tcm.g or self.A.degree != 1:
            raise ValueError("A must be a g-valued 1-form")
        if self.B.algebra is not self.tcm.h or self.B.degree != 2:
            raise ValueError("B must be an h-valued 2-form")
        if self.C.algebra is not self.tcm.l or self.C.degree != 3:
            raise ValueError("C must be an l-valued 3-form")


@dataclass
class CurvatureSet:
    F: AlgebraValuedForm                     # dA + (1/2)[A,A]
    omega1: AlgebraValuedForm                # F - alpha(B)
    omega2: AlgebraValuedForm
    omega3: AlgebraValuedForm | None = None


def field_strength(A: AlgebraValuedForm) -> AlgebraValuedForm:
    return A.d() + bracket(A, A).scale(HALF)


def curvature2(c: TwoConnection) -> CurvatureSet:
    F = field_strength(c.A)
    omega1 = F - apply_alpha(c.cm, c.B)
    omega2 = c.B.d() + act(c.cm, c.A, c.B)
    return CurvatureSet(F, omega1, omega2)


def curvature3(c: ThreeConnection) -> CurvatureSet:
    F = field_strength(c.A)
    omega1 = F - apply_linear(c.tcm.alpha, c.B, c.tcm.g)
    omega2 = c.B.d() + act(c.tcm, c.A, c.B) - apply_beta(c.tcm, c.C)
    omega3 = c.C.d() + act(c.tcm, c.A, c.C) + peiffer(c.tcm, c.B, c.B)
    return CurvatureSet(F, omega1, omega2, omega3)


def as_generalized(c) -> GeneralizedForm:
    """Encode a 2-/3-connection as a generalized 1-form (B fills both middle
    slots for N=2)."""
    if isinstance(c, TwoConnection):
        return GeneralizedForm.lie2(c.cm, 1, c.A, c.B)
    return GeneralizedForm.lie3(c.tcm, 1, c.A, c.B, c.B, c.C)


def generalized_curvature(a: GeneralizedForm, ctx: DerivativeContext) -> GeneralizedForm:
    """d a + (1/2)[a, a] for lie2/lie3/matrix profiles."""
    return gderiv(a, ctx) + gbracket(a, a).scale(HALF)


def bianchi_residual(c) -> tuple:
    """Left-hand sides of the 2-/3-Bianchi identities (all exactly zero)."""
    if isinstance(c, TwoConnection):
        cur = curvature2(c)
        r1 = cur.omega1.d() + bracket(c.A, cur.omega1) + apply_alpha(c.cm, cur.omega2)
        r2 = cur.omega2.d() + act(c.cm, c.A, cur.omega2) - act(c.cm, cur.omega1, c.B)
        return (r1, r2)
    cur = curvature3(c)
    tcm = c.tcm
    r1 = cur.omega1.d() + bracket(c.A, cur.omega1) + apply_linear(tcm.alpha, cur.omega2, tcm.g)
    r2 = (cur.omega2.d() + act(tcm, c.A, cur.omega2) - act(tcm, cur.omega1, c.B)
          + apply_beta(tcm, cur.omega3))
    r3 = (cur.omega3.d() + act(tcm, c.A, cur.omega3) - act(tcm, cur.omega1, c.C)
          - peiffer(tcm, c.B, cur.omega2) - peiffer(tcm, cur.omega2, c.B))
    return (r1, r2, r3)


def generalized_bianchi_residual(a: GeneralizedForm, ctx: DerivativeContext) -> GeneralizedForm:
    f = generalized_curvature(a, ctx)
    return gderiv(f, ctx) + gbracket(a, f)


# -- gauge transformations -------------------------------------------------------

def gauge_transform2(c: TwoConnection, G: GroupValuedZeroForm,
                     ctx: DerivativeContext = CTX_CONNECTION_1) -> TwoConnection:
    """A' = Ad_{g^{-1}}(A + dg g^{-1} - k alpha(phi)),
    B' = g^{-1} |> (B + A |> phi + d phi - k phi phi)."""
    if G.n_type != 1 or G.module is not c.cm:
        raise ValueError("need a type N=1 element over the same crossed module")
    k = ctx.k
    cm = c.cm
    dgg = G.real.dg_ginv(G.g, G.g_inverse())
    A2 = G.ad_ginv(c.A + dgg + apply_alpha(cm, G.phi).scale(-k))
    inner_part = (c.B + act(cm, c.A, G.phi) + G.phi.d()
                  - _half_square_h(cm, G.phi).scale(k))
    B2 = G.act_ginv(inner_part)
    return TwoConnection(cm, A2, B2)


def gauge_transform2_generalized(c: TwoConnection, G: GroupValuedZeroForm,
                                 ctx: DerivativeContext = CTX_CONNECTION_1) -> TwoConnection:
    """Same transformation through Ad_{G^{-1}} A + G^{-1} d G (two-path check)."""
    from .group import adjoint
    w = adjoint(G.inverse(), as_generalized(c)) + mc2(G, ctx)
    return TwoConnection(c.cm, w.slots[0], w.slots[1])


def gauge_transform2_primed(c: TwoConnection, G: GroupValuedZeroForm) -> TwoConnection:
    """The equivalent published component form (k = -1 convention):
    A' = Ad_g A - dg g^{-1} - alpha(phi),
    B' = g |> B - d phi - phi phi - A' |> phi."""
    cm = c.cm
    dgg = G.real.dg_ginv(G.g, G.g_inverse())
    A2 = G.ad_g(c.A) - dgg - apply_alpha(cm, G.phi)
    B2 = (G.act_g(c.B) - G.phi.d() - _half_square_h(cm, G.phi)
          - act(cm, A2, G.phi))
    return TwoConnection(cm, A2, B2)


def curvature_transform2(cur: CurvatureSet, G: GroupValuedZeroForm) -> CurvatureSet:
    """Covariant curvature components: Omega1' = Ad_{g^{-1}} Omega1,
    Omega2' = g^{-1} |> (Omega2 + Omega1 |> phi)."""
    cm = G.module
    o1 = G.ad_ginv(cur.omega1)
    o2 = G.act_ginv(cur.omega2 + act(cm, cur.omega1, G.phi))
    return CurvatureSet(cur.F, o1, o2)


def gauge_transform3(c: ThreeConnection, G: GroupValuedZeroForm,
                     ctx: DerivativeContext = CTX_CONNECTION_2) -> ThreeConnection:
    """Component 3-gauge transformation at (k1, k2) = (0, -1):
    A' = Ad_{g^{-1}} A + g^{-1}dg + g^{-1} alpha(phi) g,
    B' = g^{-1} |> (B + A |> phi + d phi + phi phi + beta(psi)),
    C' = g^{-1} |> (C + A |> psi + {B, phi} - {phi, B} + d psi + phi |>' psi)."""
    if G.n_type != 2 or G.module is not c.tcm:
        raise ValueError("need a type N=2 element over the same 2-crossed module")
    if not G.simplified:
        raise ValueError("3-gauge transformations use the simplified element shape")
    if (ctx.k1, ctx.k2) != (Fraction(0), Fraction(-1)):
        raise ValueError("the published component formulas require (k1, k2) = (0, -1)")
    tcm = c.tcm
    ginv = G.g_inverse()
    mc_base = G.real.mc(G.g, ginv)
    A2 = G.ad_ginv(c.A + apply_linear(tcm.alpha, G.phi, tcm.g)) + mc_base
    B2 = G.act_ginv(c.B + act(tcm, c.A, G.phi) + G.phi.d()
                    + _half_square_h(tcm, G.phi) + apply_beta(tcm, G.psi))
    C2 = G.act_ginv(c.C + act(tcm, c.A, G.psi)
                    + peiffer(tcm, c.B, G.phi) - peiffer(tcm, G.phi, c.B)
                    + G.psi.d() + act_prime(tcm, G.phi, G.psi))
    return ThreeConnection(tcm, A2, B2, C2)


def gauge_transform3_generalized(c: ThreeConnection, G: GroupValuedZeroForm,
                                 ctx: DerivativeContext = CTX_CONNECTION_2,
                                 t: Fraction = Fraction(-1)) -> ThreeConnection:
    """Ad_{G^{-1}} A + G^{-1}dG with the k1 -> k1 + t shift; the xi^2 slot is
    dropped in favour of the xi^1 slot, as in the published final display."""
    from .group import adjoint
    w = adjoint(G.inverse(), as_generalized(c)) + mc3(G, ctx, k1_shift=t)
    return ThreeConnection(c.tcm, w.slots[0], w.slots[1], w.slots[3])


# -- Chern-Simons densities and Chern forms ---------------------------------------

def cs4(c: TwoConnection, pairing: PairingData) -> OrdinaryForm:
    """2CS 4-form in components: <2F - alpha(B), B> - d<A, B>."""
    if pairing.pairing_gh is None:
        raise ValueError("pairing_gh required for the 2CS form")
    F = field_strength(c.A)
    lead = F.scale(2) - apply_alpha(c.cm, c.B)
    main = pair_forms(pairing.pairing_gh, lead, c.B)
    exact = pair_forms(pairing.pairing_gh, c.A, c.B).d()
    return main - exact


def cs4_generalized(c: TwoConnection, pairing: PairingData,
                    ctx: DerivativeContext = CTX_CONNECTION_1) -> OrdinaryForm:
    """<< a, d a + (1/3)[a, a] >> for the connection's generalized form."""
    a = as_generalized(c)
    rhs = gderiv(a, ctx) + gbracket(a, a).scale(THIRD)
    return gpairing(a, rhs, pairing)


def chern5(cur: CurvatureSet, pairing: PairingData) -> OrdinaryForm:
    """2-Chern 5-form 2<Omega1, Omega2>."""
    return pair_forms(pairing.pairing_gh, cur.omega1, cur.omega2).scale(2)


def cs5(c: ThreeConnection, pairing: PairingData) -> OrdinaryForm:
    """3CS 5-form in components: <2F - alpha(B), C> + <B, Omega2> - d<A, C>."""
    if pairing.pairing_gl is None or pairing.pairing_h_anti is None:
        raise ValueError("pairing_gl and pairing_h_anti required for the 3CS form")
    cur = curvature3(c)
    lead = cur.F.scale(2) - apply_linear(c.tcm.alpha, c.B, c.tcm.g)
    out = pair_forms(pairing.pairing_gl, lead, c.C)
    out = out + pair_forms(pairing.pairing_h_anti, c.B, cur.omega2)
    out = out - pair_forms(pairing.pairing_gl, c.A, c.C).d()
    return out


def cs5_generalized(c: ThreeConnection, pairing: PairingData,
                    ctx: DerivativeContext = CTX_CONNECTION_2) -> OrdinaryForm:
    a = as_generalized(c)
    rhs = gderiv(a, ctx) + gbracket(a, a).scale(THIRD)
    return gpairing(a, rhs, pairing, ctx)


def chern6(cur: CurvatureSet, pairing: PairingData) -> OrdinaryForm:
    """3-Chern 6-form 2<Omega1, Omega3> + <Omega2, Omega2>."""
    out = pair_forms(pairing.pairing_gl, cur.omega1, cur.omega3).scale(2)
    return out + pair_forms(pairing.pairing_h_anti, cur.omega2, cur.omega2)


def simplified_curvature_form(c: ThreeConnection) -> GeneralizedForm:
    """The curvature-slot form Omega1 + Omega2 xi1 + Omega2 xi2 + Omega3 xi1 xi2
    (differs from the generalized curvature by beta(C) in the xi^2 slot)."""
    cur = curvature3(c)
    return GeneralizedForm.lie3(c.tcm, 2, cur.omega1, cur.omega2, cur.omega2, cur.omega3)


def cs4_gauge_boundary(c: TwoConnection, G: GroupValuedZeroForm, pairing: PairingData):
    """Gauge variation of the 2CS 4-form under the primed component transform.

    Returns (difference, boundary, residual): `difference` is
    CS4(A', B') - CS4(A, B) (always closed, since the 2-Chern form is gauge
    invariant); `boundary` is the published 3-form with F(phi) read as
    d phi + (1/2)[phi, phi]; `residual` = difference + d(boundary) is
    reported, never asserted.
    """
    cm = c.cm
    gh = pairing.pairing_gh
    c2 = gauge_transform2_primed(c, G)
    diff = cs4(c2, pairing) - cs4(c, pairing)
    phi = G.phi
    f_phi = phi.d() + _half_square_h(cm, phi)
    cubic = phi.d() + _half_square_h(cm, phi).scale(Fraction(2, 3))
    dgg = G.real.dg_ginv(G.g, G.g_inverse())
    boundary = pair_forms(gh, G.ad_g(c.A), f_phi)
    boundary = boundary + pair_forms(gh, apply_alpha(cm, phi), cubic)
    boundary = boundary - pair_forms(gh, dgg + apply_alpha(cm, phi),
                                     G.act_g(c.B) + f_phi)
    residual = diff + boundary.d()
    return diff, boundary, residual


# -- actions ---------------------------------------------------------------------

def action_ym(algebra, A: AlgebraValuedForm, pairing: PairingData) -> Fraction:
    """((F, F)) for an ordinary connection over the unit cube."""
    F = field_strength(A)
    return inner_sym(pairing.sym_g, F, F)


def action_2cs(c: TwoConnection, pairing: PairingData) -> Fraction:
    """Integral of <2F - alpha(B), B> over the 4-cube."""
    F = field_strength(c.A)
    lead = F.scale(2) - apply_alpha(c.cm, c.B)
    return pair_forms(pairing.pairing_gh, lead, c.B).integrate_cube()


def action_3cs(c: ThreeConnection, pairing: PairingData) -> Fraction:
    """Integral of <2F - alpha(B), C> + <B, Omega2> over the 5-cube."""
    cur = curvature3(c)
    lead = cur.F.scale(2) - apply_linear(c.tcm.alpha, c.B, c.tcm.g)
    density = pair_forms(pairing.pairing_gl, lead, c.C)
    density = density + pair_forms(pairing.pairing_h_anti, c.B, cur.omega2)
    return density.integrate_cube()


def action_2ym(c: TwoConnection, pairing: PairingData) -> Fraction:
    """((F, F)) of the generalized curvature: sum of the slotwise inner
    products <Omega1, *Omega1> + <Omega2, *Omega2>."""
    cur = curvature2(c)
    f = GeneralizedForm.lie2(c.cm, 2, cur.omega1, cur.omega2)
    return ginner(f, f, pairing)


def action_3ym(c: ThreeConnection, pairing: PairingData) -> Fraction:
    """Sum of <Omega_i, *Omega_i> with unit weights (the published expansion)."""
    cur = curvature3(c)
    return (inner_sym(pairing.sym_g, cur.omega1, cur.omega1)
            + inner_sym(pairing.sym_h, cur.omega2, cur.omega2)
            + inner_sym(pairing.sym_l, cur.omega3, cur.omega3))


def action_3ym_halved(c: ThreeConnection, pairing: PairingData) -> Fraction:
    """Literal ((F~, F~)) with the 1/2-weighted middle slots; carries the
    <Omega2, *Omega2> term with total weight 1/2 instead of 1."""
    cur = curvature3(c)
    f = GeneralizedForm.lie3(c.tcm, 2, cur.omega1, cur.omega2.scale(HALF),
                             cur.omega2.scale(HALF), cur.omega3)
    return ginner(f, f, pairing)


ACTION_KINDS = ("ym", "2cs", "3cs", "2ym", "3ym")


# -- plain matrix-Lie-algebra picture ---------------------------------------------

def plain_connection1(A1, A2) -> GeneralizedForm:
    """Type N=1 matrix-valued generalized connection A1 + A2 xi."""
    return GeneralizedForm.matrix(1, 1, (A1, A2))


def plain_connection2(A1, A2, A2p, A3) -> GeneralizedForm:
    return GeneralizedForm.matrix(2, 1, (A1, A2, A2p, A3))


def plain_element1(pi, mu) -> GeneralizedForm:
    """(1 + mu xi) pi as a matrix-valued generalized 0-form (pi, mu pi)."""
    return GeneralizedForm.matrix(1, 0, (pi.mat, mu.matmul(pi.mat)))


def plain_element2(pi, mu, mu2, nu) -> GeneralizedForm:
    """(1 + mu xi1 + mu2 xi2 + (nu + mu2 mu) xi1 xi2) pi in slot form."""
    top = (nu + mu2.matmul(mu)).matmul(pi.mat)
    return GeneralizedForm.matrix(2, 0,
                                  (pi.mat, mu.matmul(pi.mat), mu2.matmul(pi.mat), top))


def plain_element_inverse(e: GeneralizedForm) -> GeneralizedForm:
    """Inverse generalized 0-form, solving e * e^{-1} = 1 slot by slot."""
    from .matform import UnipotentMatrixFunction
    if e.kind != "matrix" or e.degree != 0:
        raise ValueError("need a matrix-valued generalized 0-form")
    g0 = e.slots[0]
    h0 = UnipotentMatrixFunction(g0).inverse().mat
    if e.n_type == 1:
        g1 = e.slots[1]
        h1 = -h0.matmul(g1).matmul(h0)
        return GeneralizedForm.matrix(1, 0, (h0, h1))
    g1, g2, g3 = e.slots[1], e.slots[2], e.slots[3]
    h1 = -h0.matmul(g1).matmul(h0)
    h2 = -h0.matmul(g2).matmul(h0)
    # 0 = g0 h3 - g1 h2 + g2 h1 + g3 h0
    h3 = -h0.matmul(g3.matmul(h0) - g1.matmul(h2) + g2.matmul(h1))
    return GeneralizedForm.matrix(2, 0, (h0, h1, h2, h3))


def plain_gauge_transform(a: GeneralizedForm, e: GeneralizedForm,
                          ctx: DerivativeContext) -> GeneralizedForm:
    """a -> e^{-1} d e + e^{-1} a e."""
    einv = plain_element_inverse(e)
    return gwedge(einv, gderiv(e, ctx)) + gwedge(gwedge(einv, a), e)


def plain_conjugate(f: GeneralizedForm, e: GeneralizedForm) -> GeneralizedForm:
    """f -> e^{-1} f e."""
    einv = plain_element_inverse(e)
    return gwedge(gwedge(einv, f), e)


def plain_covariant_derivative(a: GeneralizedForm, w: GeneralizedForm,
                               ctx: DerivativeContext) -> GeneralizedForm:
    """D w = d w + a ^ w + (-1)^{p+1} w ^ a."""
    sign = -1 if (w.degree + 1) & 1 else 1
    return gderiv(w, ctx) + gwedge(a, w) + gwedge(w, a).scale(sign)
