"""Group-valued generalized 0-forms over unipotent polynomial matrix groups.

A group element is a unipotent polynomial matrix function in a fixed faithful
representation; every derived object (adjoint matrices, the action on h and
l, g^{-1}dg) is exact rational polynomial data.  `GroupValuedZeroForm`
realizes (1 + phi xi) g  and its type N=2 analogue, together with products,
inverses, the 2-/3-Maurer-Cartan forms and the adjoint action on generalized
forms.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial, ZERO
from .forms import OrdinaryForm
from .algebra import (
    AlgebraValuedForm,
    act,
    act_prime,
    apply_alpha,
    apply_beta,
    apply_linear,
    bracket,
    peiffer,
)
from .matform import MatrixForm, UnipotentMatrixFunction
from .genform import DerivativeContext, GeneralizedForm, gbracket, gderiv


def form0_poly(f: OrdinaryForm) -> Polynomial:
    if f.degree != 0:
        raise ValueError("expected a 0-form")
    return f.comps.get((), Polynomial.zero(f.dim))


class GroupRealization:
    """A matrix realization of the gauge group and its linear actions.

    `rep` holds one constant matrix per basis element of g; `coord_rules`
    give the linear read-off (basis index, row, col, factor) recovering
    algebra coordinates from a matrix in the image of the representation.
    `sample_mode` is "full" (the whole unipotent group of the given size;
    requires the representation to be all of the strictly upper triangular
    matrices) or "exp" (exponentials of the represented algebra).
    """

    def __init__(self, name, algebra, rep_size, rep, coord_rules, sample_mode,
                 act_h_builder=None, act_l_builder=None):
        self.name = name
        self.algebra = algebra
        self.rep_size = rep_size
        self.rep = tuple(tuple(tuple(x for x in row) for row in m) for m in rep)
        self.coord_rules = tuple(coord_rules)
        self.sample_mode = sample_mode
        self.act_h_builder = act_h_builder
        self.act_l_builder = act_l_builder

    # -- elements ----------------------------------------------------------

    def identity(self, dim: int) -> UnipotentMatrixFunction:
        return UnipotentMatrixFunction.identity(self.rep_size, dim)

    def embed(self, xi: AlgebraValuedForm) -> MatrixForm:
        """Matrix image of an algebra-valued 0-form."""
        n = self.rep_size
        dim = xi.dim
        out = [[OrdinaryForm(dim, 0) for _ in range(n)] for _ in range(n)]
        for a, comp in enumerate(xi.comps):
            if comp.is_zero():
                continue
            mat = self.rep[a]
            for i in range(n):
                for j in range(n):
                    if mat[i][j]:
                        out[i][j] = out[i][j] + comp.scale(mat[i][j])
        return MatrixForm(n, dim, 0, out)

    def exp(self, xi: AlgebraValuedForm) -> UnipotentMatrixFunction:
        return UnipotentMatrixFunction.from_nilpotent(self.embed(xi))

    def coords(self, mat: MatrixForm) -> AlgebraValuedForm:
        """Algebra coordinates of a matrix lying in the represented algebra."""
        comps = [OrdinaryForm(mat.dim, mat.degree) for _ in range(self.algebra.dim)]
        for a, row, col, factor in self.coord_rules:
            comps[a] = mat.entries[row][col].scale(factor)
        return AlgebraValuedForm(self.algebra, mat.dim, mat.degree, comps)

    # -- derived linear data -------------------------------------------------

    def ad_matrix(self, g: UnipotentMatrixFunction, g_inv=None):
        """Polynomial matrix of Ad_g acting on g-coordinates."""
        g_inv = g_inv or g.inverse()
        m = self.algebra.dim
        cols = []
        for a in range(m):
            basis = MatrixForm.from_polys(self.rep[a], g.dim)
            conj = g.mat.matmul(basis).matmul(g_inv.mat)
            cols.append([form0_poly(f) for f in self.coords(conj).comps])
        return tuple(tuple(cols[a][c] for a in range(m)) for c in range(m))

    def mc(self, g: UnipotentMatrixFunction, g_inv=None) -> AlgebraValuedForm:
        """g^{-1} dg as a g-valued 1-form."""
        g_inv = g_inv or g.inverse()
        return self.coords(g_inv.mat.matmul(g.d()))

    def dg_ginv(self, g: UnipotentMatrixFunction, g_inv=None) -> AlgebraValuedForm:
        """dg g^{-1} as a g-valued 1-form."""
        g_inv = g_inv or g.inverse()
        return self.coords(g.d().matmul(g_inv.mat))

    def act_h_matrix(self, g, g_inv=None):
        g_inv = g_inv or g.inverse()
        return self.act_h_builder(self, g, g_inv)

    def act_l_matrix(self, g, g_inv=None):
        if self.act_l_builder is None:
            raise ValueError("realization carries no action on l")
        g_inv = g_inv or g.inverse()
        return self.act_l_builder(self, g, g_inv)


# -- action builders ----------------------------------------------------------

def conjugation_action(real, g, g_inv):
    """g acts on h = g by Ad."""
    return real.ad_matrix(g, g_inv)


def coadjoint_action(real, g, g_inv):
    """g acts on the dual space by (Ad_{g^{-1}})^T."""
    ad_inv = real.ad_matrix(g_inv, g)
    m = len(ad_inv)
    return tuple(tuple(ad_inv[b][a] for b in range(m)) for a in range(m))


def natural_action(real, g, g_inv):
    """g acts on the defining column space; coordinates are the entries."""
    return tuple(tuple(form0_poly(e) for e in row) for row in g.mat.entries)


def dual_natural_action(real, g, g_inv):
    """(g^{-1})^T on the dual of the defining representation."""
    n = g.size
    return tuple(tuple(form0_poly(g_inv.mat.entries[j][i]) for j in range(n)) for i in range(n))


def block_action(*builders):
    def build(real, g, g_inv):
        blocks = [b(real, g, g_inv) for b in builders]
        total = sum(len(b) for b in blocks)
        dim = g.dim
        zero = Polynomial.zero(dim)
        out = [[zero] * total for _ in range(total)]
        off = 0
        for b in blocks:
            for i, row in enumerate(b):
                for j, x in enumerate(row):
                    out[off + i][off + j] = x
            off += len(b)
        return tuple(tuple(r) for r in out)
    return build


def trivial_action(m):
    def build(real, g, g_inv):
        dim = g.dim
        one = Polynomial.constant(dim, 1)
        zero = Polynomial.zero(dim)
        return tuple(tuple(one if i == j else zero for j in range(m)) for i in range(m))
    return build


# -- group-valued generalized 0-forms -----------------------------------------

class GroupValuedZeroForm:
    __slots__ = ("real", "module", "n_type", "g", "phi", "phi2", "psi", "_cache")

    def __init__(self, real: GroupRealization, module, n_type: int,
                 g: UnipotentMatrixFunction, phi: AlgebraValuedForm,
                 phi2: AlgebraValuedForm | None = None,
                 psi: AlgebraValuedForm | None = None):
        self.real = real
        self.module = module
        self.n_type = n_type
        self.g = g
        if phi.algebra is not module.h or phi.degree != 1:
            raise ValueError("phi must be an h-valued 1-form")
        self.phi = phi
        if n_type == 1:
            if phi2 is not None or psi is not None:
                raise ValueError("type N=1 elements carry only (g, phi)")
            self.phi2 = None
            self.psi = None
        elif n_type == 2:
            self.phi2 = phi2 if phi2 is not None else AlgebraValuedForm(module.h, g.dim, 1)
            self.psi = psi if psi is not None else AlgebraValuedForm(module.l, g.dim, 2)
            if self.phi2.algebra is not module.h or self.phi2.degree != 1:
                raise ValueError("phi2 must be an h-valued 1-form")
            if self.psi.algebra is not module.l or self.psi.degree != 2:
                raise ValueError("psi must be an l-valued 2-form")
        else:
            raise ValueError("group-valued 0-forms exist for N = 1, 2")
        self._cache = {}

    # -- cached matrix data --------------------------------------------------

    def g_inverse(self) -> UnipotentMatrixFunction:
        if "ginv" not in self._cache:
            self._cache["ginv"] = self.g.inverse()
        return self._cache["ginv"]

    def _mat(self, key):
        if key in self._cache:
            return self._cache[key]
        ginv = self.g_inverse()
        real = self.real
        if key == "ad":
            val = real.ad_matrix(self.g, ginv)
        elif key == "ad_inv":
            val = real.ad_matrix(ginv, self.g)
        elif key == "acth":
            val = real.act_h_matrix(self.g, ginv)
        elif key == "acth_inv":
            val = real.act_h_matrix(ginv, self.g)
        elif key == "actl":
            val = real.act_l_matrix(self.g, ginv)
        elif key == "actl_inv":
            val = real.act_l_matrix(ginv, self.g)
        else:
            raise KeyError(key)
        self._cache[key] = val
        return val

    def ad_g(self, A):
        return apply_linear(self._mat("ad"), A, self.module.g)

    def ad_ginv(self, A):
        return apply_linear(self._mat("ad_inv"), A, self.module.g)

    def act_g(self, E):
        if E.algebra is self.module.h:
            return apply_linear(self._mat("acth"), E, self.module.h)
        return apply_linear(self._mat("actl"), E, self.module.l)

    def act_ginv(self, E):
        if E.algebra is self.module.h:
            return apply_linear(self._mat("acth_inv"), E, self.module.h)
        return apply_linear(self._mat("actl_inv"), E, self.module.l)

    # -- group structure -----------------------------------------------------

    @property
    def simplified(self) -> bool:
        return self.n_type == 1 or self.phi2.is_zero()

    @classmethod
    def identity_element(cls, real, module, n_type, dim):
        g = real.identity(dim)
        phi = AlgebraValuedForm(module.h, dim, 1)
        return cls(real, module, n_type, g, phi)

    def is_identity(self) -> bool:
        ok = self.g.is_identity() and self.phi.is_zero()
        if self.n_type == 2:
            ok = ok and self.phi2.is_zero() and self.psi.is_zero()
        return ok

    def compose(self, other: "GroupValuedZeroForm") -> "GroupValuedZeroForm":
        if self.real is not other.real or self.module is not other.module \
                or self.n_type != other.n_type:
            raise ValueError("group model mismatch")
        g = self.g.mul(other.g)
        phi = self.phi + self.act_g(other.phi)
        if self.n_type == 1:
            return GroupValuedZeroForm(self.real, self.module, 1, g, phi)
        phi2 = self.phi2 + self.act_g(other.phi2)
        psi = self.psi + self.act_g(other.psi)
        return GroupValuedZeroForm(self.real, self.module, 2, g, phi, phi2, psi)

    def inverse(self) -> "GroupValuedZeroForm":
        ginv = self.g_inverse()
        phi = -self.act_ginv(self.phi)
        if self.n_type == 1:
            return GroupValuedZeroForm(self.real, self.module, 1, ginv, phi)
        phi2 = -self.act_ginv(self.phi2)
        psi = -self.act_ginv(self.psi)
        return GroupValuedZeroForm(self.real, self.module, 2, ginv, phi, phi2, psi)

    def __eq__(self, other):
        if not isinstance(other, GroupValuedZeroForm):
            return NotImplemented
        same = (self.real is other.real and self.module is other.module
                and self.n_type == other.n_type and self.g == other.g
                and self.phi == other.phi)
        if self.n_type == 2:
            same = same and self.phi2 == other.phi2 and self.psi == other.psi
        return same

    def __repr__(self):
        return f"GroupValuedZeroForm(N={self.n_type}, {self.real.name})"


def _half_square_h(module, phi):
    """phi phi = (1/2)[phi, phi] in h (zero for abelian h)."""
    if module.h.is_abelian():
        return AlgebraValuedForm(module.h, phi.dim, 2)
    return bracket(phi, phi).scale(Fraction(1, 2))


def mc2(G: GroupValuedZeroForm, ctx: DerivativeContext) -> GeneralizedForm:
    """2-Maurer-Cartan form G^{-1} dG for type N=1 elements."""
    if G.n_type != 1 or ctx.n_type != 1:
        raise ValueError("mc2 needs a type N=1 element and context")
    cm = G.module
    k = ctx.k
    ginv = G.g_inverse()
    U = G.real.mc(G.g, ginv) + G.ad_ginv(apply_alpha(cm, G.phi)).scale(-k)
    inner = G.phi.d() - _half_square_h(cm, G.phi).scale(k)
    V = G.act_ginv(inner)
    return GeneralizedForm.lie2(cm, 1, U, V)


def mc3(G: GroupValuedZeroForm, ctx: DerivativeContext,
        k1_shift: Fraction | None = None) -> GeneralizedForm:
    """3-Maurer-Cartan form for simplified type N=2 elements.

    `k1_shift` substitutes k1 -> k1 + t inside the formula (used by the
    3-gauge transformation, which couples the shift t to k2).
    """
    if G.n_type != 2 or ctx.n_type != 2:
        raise ValueError("mc3 needs a type N=2 element and context")
    if not G.simplified:
        raise ValueError("mc3 is defined for the simplified shape (1 + phi xi1 + psi xi1 xi2) g")
    tcm = G.module
    k1 = ctx.k1 if k1_shift is None else ctx.k1 + k1_shift
    k2 = ctx.k2
    ginv = G.g_inverse()
    beta_psi = apply_beta(tcm, G.psi)
    alpha_phi = apply_linear(tcm.alpha, G.phi, tcm.g)
    U = G.real.mc(G.g, ginv) + G.ad_ginv(alpha_phi).scale(-k1)
    V = G.act_ginv(G.phi.d() - _half_square_h(tcm, G.phi).scale(k1) - beta_psi.scale(k2))
    Vp = G.act_ginv(beta_psi).scale(k1)
    W = G.act_ginv(G.psi.d() - act_prime(tcm, G.phi, G.psi).scale(k1))
    return GeneralizedForm.lie3(tcm, 1, U, V, Vp, W)


def mc_form(G: GroupValuedZeroForm, ctx: DerivativeContext) -> GeneralizedForm:
    return mc2(G, ctx) if G.n_type == 1 else mc3(G, ctx)


def mc_residual(G: GroupValuedZeroForm, ctx: DerivativeContext) -> GeneralizedForm:
    """d l + (1/2)[l, l]; exactly zero under the Maurer-Cartan theorems."""
    l = mc_form(G, ctx)
    return gderiv(l, ctx) + gbracket(l, l).scale(Fraction(1, 2))


def adjoint(G: GroupValuedZeroForm, w: GeneralizedForm) -> GeneralizedForm:
    """Adjoint action of a group-valued 0-form on a generalized form."""
    mod = G.module
    if G.n_type == 1:
        if w.kind != "lie2" or w.module is not mod:
            raise ValueError("adjoint needs a matching lie2-profile form")
        U, V = w.slots
        AdU = G.ad_g(U)
        Vout = G.act_g(V) - act(mod, AdU, G.phi)
        return GeneralizedForm.lie2(mod, w.degree, AdU, Vout)
    if w.kind != "lie3" or w.module is not mod:
        raise ValueError("adjoint needs a matching lie3-profile form")
    if not G.simplified:
        raise ValueError("the adjoint action is defined for simplified elements")
    U, V, Vp, W = w.slots
    AdU = G.ad_g(U)
    gV = G.act_g(V)
    gVp = G.act_g(Vp)
    gW = G.act_g(W)
    Vout = gV - act(mod, AdU, G.phi)
    Wout = (gW - act(mod, AdU, G.psi)
            - peiffer(mod, gVp, G.phi) + peiffer(mod, G.phi, gVp))
    return GeneralizedForm.lie3(mod, w.degree, AdU, Vout, gVp, Wout)
