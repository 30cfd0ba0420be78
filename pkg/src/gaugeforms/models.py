"""Builtin algebra models with exact matrix group realizations.

Every model keeps all arithmetic inside rational polynomial matrices:

* strictly upper-triangular algebras n_r = Lie(U_r) with the full unipotent
  group U_r acting by conjugation (adjoint models) or on duals (coadjoint);
* sl(2) with its trace-form pairing for algebra-level checks (no polynomial
  group realization exists, so group-level checks skip it);
* the free two-step nilpotent algebra on three generators, which carries a
  non-degenerate invariant symmetric pairing and embeds in U_7, giving an
  adjoint model with alpha = id *and* pairing *and* group;
* 2-crossed modules in the abelian-h setting: a symplectic family
  (Peiffer lifting built from an invariant antisymmetric form on V + V*,
  full invariant pairings), a beta = id chain exercising the beta terms,
  and a small non-fine model with a nonzero induced action |>'.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import ZERO
from .algebra import (
    CrossedModuleData,
    LieAlgebraData,
    PairingData,
    TwoCrossedModuleData,
    zero_tensor,
    zeros,
)
from .group import (
    GroupRealization,
    block_action,
    coadjoint_action,
    conjugation_action,
    dual_natural_action,
    natural_action,
    trivial_action,
)

ONE = Fraction(1)
HALF = Fraction(1, 2)


@dataclass
class Model:
    name: str
    kind: str                                   # "lie" | "crossed" | "two_crossed"
    algebra: LieAlgebraData | None = None
    cm: CrossedModuleData | None = None
    tcm: TwoCrossedModuleData | None = None
    pairing: PairingData | None = None
    group: GroupRealization | None = None

    @property
    def module(self):
        return self.cm if self.cm is not None else self.tcm

    def g_algebra(self):
        if self.kind == "lie":
            return self.algebra
        return self.module.g


# -- basic algebras -----------------------------------------------------------

def abelian_algebra(name: str, dim: int) -> LieAlgebraData:
    return LieAlgebraData(name, dim)


def sl2_algebra() -> LieAlgebraData:
    f = [[[ZERO] * 3 for _ in range(3)] for _ in range(3)]
    # basis H, E, F
    f[0][1][1] = Fraction(2)
    f[1][0][1] = Fraction(-2)
    f[0][2][2] = Fraction(-2)
    f[2][0][2] = Fraction(2)
    f[1][2][0] = ONE
    f[2][1][0] = -ONE
    return LieAlgebraData("sl2", 3, f, basis=("H", "E", "F"))


def upper_pairs(r: int):
    return [(i, j) for i in range(r) for j in range(i + 1, r)]


def strict_upper_algebra(r: int) -> LieAlgebraData:
    """n_r: strictly upper-triangular r x r matrices, basis E_ij (i < j)."""
    pairs = upper_pairs(r)
    idx = {p: a for a, p in enumerate(pairs)}
    m = len(pairs)
    f = [[[ZERO] * m for _ in range(m)] for _ in range(m)]
    for a, (i, j) in enumerate(pairs):
        for b, (k, l) in enumerate(pairs):
            # [E_ij, E_kl] = d_jk E_il - d_li E_kj
            if j == k:
                f[a][b][idx[(i, l)]] += ONE
            if l == i:
                f[a][b][idx[(k, j)]] -= ONE
    basis = tuple(f"E{i+1}{j+1}" for i, j in pairs)
    return LieAlgebraData(f"n{r}", m, f, basis=basis)


def _eps(i, j, k):
    if (i, j, k) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        return ONE
    if (i, j, k) in ((0, 2, 1), (2, 1, 0), (1, 0, 2)):
        return -ONE
    return ZERO


def free_two_step_algebra() -> LieAlgebraData:
    """Free 2-step nilpotent on three generators: [x_i, x_j] = eps_ijk z_k."""
    f = [[[ZERO] * 6 for _ in range(6)] for _ in range(6)]
    for i in range(3):
        for j in range(3):
            for k in range(3):
                e = _eps(i, j, k)
                if e:
                    f[i][j][3 + k] = e
    return LieAlgebraData("fn32", 6, f, basis=("x1", "x2", "x3", "z1", "z2", "z3"))


def adjoint_tensor(alg: LieAlgebraData):
    return alg.f


def coadjoint_tensor(alg: LieAlgebraData):
    """X_a |> eta^b = -f[a][c][b] eta^c on the dual space."""
    n = alg.dim
    t = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                t[a][b][c] = -alg.f[a][c][b]
    return t


def identity_matrix(n: int):
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


# -- group realizations --------------------------------------------------------

def full_unipotent_realization(r: int, alg: LieAlgebraData,
                               act_h_builder, act_l_builder=None) -> GroupRealization:
    pairs = upper_pairs(r)
    rep = []
    rules = []
    for a, (i, j) in enumerate(pairs):
        m = [[ZERO] * r for _ in range(r)]
        m[i][j] = ONE
        rep.append(m)
        rules.append((a, i, j, ONE))
    return GroupRealization(f"U{r}", alg, r, rep, rules, "full",
                            act_h_builder, act_l_builder)


def free_two_step_realization(alg: LieAlgebraData) -> GroupRealization:
    """Faithful 7x7 unipotent representation of the free 2-step algebra.

    Basis order (u1, u2, u3, w1, w2, w3, w0): x_i maps w0 -> w_i and
    w_j -> eps_ijk u_k; z_k maps w0 -> 2 u_k.  Coordinates are read off the
    w0 column.
    """
    rep = []
    rules = []
    for i in range(3):
        m = [[ZERO] * 7 for _ in range(7)]
        m[3 + i][6] = ONE
        for j in range(3):
            for k in range(3):
                e = _eps(i, j, k)
                if e:
                    m[k][3 + j] = e
        rep.append(m)
        rules.append((i, 3 + i, 6, ONE))
    for k in range(3):
        m = [[ZERO] * 7 for _ in range(7)]
        m[k][6] = Fraction(2)
        rep.append(m)
        rules.append((3 + k, k, 6, HALF))
    return GroupRealization("expFN32", alg, 7, rep, rules, "exp",
                            conjugation_action)


# -- crossed-module models -------------------------------------------------------

def _adjoint_crossed(name: str, alg: LieAlgebraData) -> CrossedModuleData:
    return CrossedModuleData(name, alg, alg, identity_matrix(alg.dim), adjoint_tensor(alg))


def _build_abelian_u1() -> Model:
    alg = abelian_algebra("u1", 1)
    return Model("abelian_u1", "lie", algebra=alg,
                 pairing=PairingData(sym_g=identity_matrix(1)))


def _build_sl2() -> Model:
    alg = sl2_algebra()
    return Model("sl2", "lie", algebra=alg,
                 pairing=PairingData(sym_g=identity_matrix(3)))


def _sl2_trace_form():
    # tr in the defining representation: <H,H>=2, <E,F>=<F,E>=1
    m = [[ZERO] * 3 for _ in range(3)]
    m[0][0] = Fraction(2)
    m[1][2] = ONE
    m[2][1] = ONE
    return m


def _build_adjoint_sl2() -> Model:
    alg = sl2_algebra()
    cm = _adjoint_crossed("adjoint_sl2", alg)
    pairing = PairingData(pairing_gh=_sl2_trace_form(),
                          sym_g=identity_matrix(3), sym_h=identity_matrix(3))
    return Model("adjoint_sl2", "crossed", cm=cm, pairing=pairing)


def _build_adjoint_heisenberg() -> Model:
    alg = strict_upper_algebra(3)
    cm = _adjoint_crossed("adjoint_heisenberg", alg)
    group = full_unipotent_realization(3, alg, conjugation_action)
    pairing = PairingData(sym_g=identity_matrix(3), sym_h=identity_matrix(3))
    return Model("adjoint_heisenberg", "crossed", cm=cm, pairing=pairing, group=group)


def _build_skeletal_coadjoint() -> Model:
    alg = strict_upper_algebra(3)
    dual = abelian_algebra("n3*", 3)
    cm = CrossedModuleData("skeletal_coadjoint", alg, dual,
                           zeros(3, 3), coadjoint_tensor(alg))
    group = full_unipotent_realization(3, alg, coadjoint_action)
    pairing = PairingData(pairing_gh=identity_matrix(3),
                          sym_g=identity_matrix(3), sym_h=identity_matrix(3))
    return Model("skeletal_coadjoint", "crossed", cm=cm, pairing=pairing, group=group)


def _fn32_pairing():
    # <x_i, z_j> = delta_ij, generators and centre isotropic
    m = [[ZERO] * 6 for _ in range(6)]
    for i in range(3):
        m[i][3 + i] = ONE
        m[3 + i][i] = ONE
    return m


def _build_adjoint_quadratic() -> Model:
    alg = free_two_step_algebra()
    cm = _adjoint_crossed("adjoint_quadratic", alg)
    group = free_two_step_realization(alg)
    pairing = PairingData(pairing_gh=_fn32_pairing(),
                          sym_g=identity_matrix(6), sym_h=identity_matrix(6))
    return Model("adjoint_quadratic", "crossed", cm=cm, pairing=pairing, group=group)


# -- 2-crossed models ------------------------------------------------------------

def _symplectic_tcm(r: int) -> Model:
    """g = n_r acting on h = V + V*, l = g* coadjoint, Peiffer lifting from
    the invariant symplectic pairing on h; beta = 0, alpha = 0 (abelian-h)."""
    alg = strict_upper_algebra(r)
    ng = alg.dim
    nh = 2 * r
    h = abelian_algebra(f"v{r}+v{r}*", nh)
    l = abelian_algebra(f"n{r}*", ng)
    # action on V + V*: block diag(rho, -rho^T) for the defining rho
    pairs = upper_pairs(r)
    act_h = [[[ZERO] * nh for _ in range(nh)] for _ in range(ng)]
    for a, (i, j) in enumerate(pairs):
        # rho_a = E_ij: v_j -> v_i ; eta_i -> -eta_j
        act_h[a][j][i] = ONE
        act_h[a][r + i][r + j] = -ONE
    act_l = coadjoint_tensor(alg)
    # M(v_i, eta_j) = delta_ij antisymmetric
    M = [[ZERO] * nh for _ in range(nh)]
    for i in range(r):
        M[i][r + i] = ONE
        M[r + i][i] = -ONE
    peiffer = [[[ZERO] * ng for _ in range(nh)] for _ in range(nh)]
    for b in range(nh):
        for c in range(nh):
            for a in range(ng):
                acc = ZERO
                for d in range(nh):
                    if M[c][d] and act_h[a][b][d]:
                        acc += M[c][d] * act_h[a][b][d]
                if acc:
                    peiffer[b][c][a] = HALF * acc
    tcm = TwoCrossedModuleData(f"symplectic{r}", alg, h, l,
                               zeros(ng, nh), zeros(nh, ng),
                               act_h, act_l, peiffer)
    group = full_unipotent_realization(
        r, alg, block_action(natural_action, dual_natural_action), coadjoint_action)
    pairing = PairingData(pairing_gl=identity_matrix(ng), pairing_h_anti=M,
                          sym_g=identity_matrix(ng), sym_h=identity_matrix(nh),
                          sym_l=identity_matrix(ng))
    return Model(f"symplectic{r}", "two_crossed", tcm=tcm, pairing=pairing, group=group)


def _build_beta_chain() -> Model:
    """g = n_3 acting naturally on h = l = Q^3, beta = id, trivial lifting."""
    alg = strict_upper_algebra(3)
    h = abelian_algebra("v3", 3)
    l = abelian_algebra("v3'", 3)
    pairs = upper_pairs(3)
    act = [[[ZERO] * 3 for _ in range(3)] for _ in range(alg.dim)]
    for a, (i, j) in enumerate(pairs):
        act[a][j][i] = ONE
    tcm = TwoCrossedModuleData("beta_chain", alg, h, l,
                               zeros(alg.dim, 3), identity_matrix(3),
                               act, act, zero_tensor(3, 3, 3))
    group = full_unipotent_realization(3, alg, natural_action, natural_action)
    pairing = PairingData(sym_g=identity_matrix(3), sym_h=identity_matrix(3),
                          sym_l=identity_matrix(3))
    return Model("beta_chain", "two_crossed", tcm=tcm, pairing=pairing, group=group)


def _build_peiffer_pair() -> Model:
    """Small non-fine model: nonzero lifting with a nonzero induced action.

    h = Q^2, l = Q^2, beta(f1) = e1, beta(f2) = 0, {e1,e2} = -{e2,e1} =
    {e2,e2} = f2; the one-dimensional g acts trivially.
    """
    g = abelian_algebra("t1", 1)
    h = abelian_algebra("p2", 2)
    l = abelian_algebra("q2", 2)
    beta = [[ONE, ZERO], [ZERO, ZERO]]
    peiffer = zero_tensor(2, 2, 2)
    peiffer = [[list(row) for row in m] for m in peiffer]
    peiffer[0][1][1] = ONE
    peiffer[1][0][1] = -ONE
    peiffer[1][1][1] = ONE
    tcm = TwoCrossedModuleData("peiffer_pair", g, h, l,
                               zeros(1, 2), beta,
                               zero_tensor(1, 2, 2), zero_tensor(1, 2, 2), peiffer)
    rep = [[[ZERO, ONE], [ZERO, ZERO]]]
    real = GroupRealization("U2t", g, 2, rep, [(0, 0, 1, ONE)], "full",
                            trivial_action(2), trivial_action(2))
    pairing = PairingData(sym_g=identity_matrix(1), sym_h=identity_matrix(2),
                          sym_l=identity_matrix(2))
    return Model("peiffer_pair", "two_crossed", tcm=tcm, pairing=pairing, group=real)


_BUILDERS = {
    "abelian_u1": _build_abelian_u1,
    "sl2": _build_sl2,
    "adjoint_sl2": _build_adjoint_sl2,
    "adjoint_heisenberg": _build_adjoint_heisenberg,
    "skeletal_coadjoint": _build_skeletal_coadjoint,
    "adjoint_quadratic": _build_adjoint_quadratic,
    "symplectic3": lambda: _symplectic_tcm(3),
    "symplectic4": lambda: _symplectic_tcm(4),
    "beta_chain": _build_beta_chain,
    "peiffer_pair": _build_peiffer_pair,
}

_CACHE: dict = {}


def builtin_names():
    return sorted(_BUILDERS)


def builtin(name: str) -> Model:
    if name not in _BUILDERS:
        raise KeyError(f"unknown builtin model {name!r}; known: {', '.join(builtin_names())}")
    if name not in _CACHE:
        _CACHE[name] = _BUILDERS[name]()
    return _CACHE[name]
