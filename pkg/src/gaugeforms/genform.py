"""Generalized forms of types N = 0, 1, 2.

A type-N degree-p generalized form is the ordered tuple of its expansion
coefficients in the auxiliary basis of N anticommuting degree-(-1) elements
xi^i: slots of degrees (p,), (p, p+1) or (p, p+1, p+1, p+2).  Slots are plain
`OrdinaryForm`s ("real" profile), square matrices of forms ("matrix" profile,
used by the matrix-Lie-algebra picture), or algebra-valued forms over a
crossed module ("lie2") / 2-crossed module ("lie3").

The exterior derivative depends on the constants k (N=1) or k1, k2 (N=2)
fixed by a `DerivativeContext`; it is nilpotent for every constant choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import as_fraction
from .forms import OrdinaryForm
from .algebra import (
    AlgebraValuedForm,
    CrossedModuleData,
    TwoCrossedModuleData,
    act,
    apply_alpha,
    apply_beta,
    apply_linear,
    bracket,
    inner_sym,
    pair_forms,
    peiffer,
)
from .matform import MatrixForm


@dataclass(frozen=True)
class DerivativeContext:
    """Constants fixing the derivative of the auxiliary basis elements."""

    n_type: int
    k: Fraction | None = None
    k1: Fraction | None = None
    k2: Fraction | None = None

    def __post_init__(self):
        if self.n_type == 0:
            pass
        elif self.n_type == 1:
            object.__setattr__(self, "k", as_fraction(self.k if self.k is not None else 0))
        elif self.n_type == 2:
            object.__setattr__(self, "k1", as_fraction(self.k1 if self.k1 is not None else 0))
            object.__setattr__(self, "k2", as_fraction(self.k2 if self.k2 is not None else 0))
        else:
            raise ValueError("type N must be 0, 1 or 2")


CTX_CONNECTION_1 = DerivativeContext(1, k=Fraction(-1))
CTX_CONNECTION_2 = DerivativeContext(2, k1=Fraction(0), k2=Fraction(-1))


def _slot_degree_list(n_type: int, p: int):
    if n_type == 0:
        return (p,)
    if n_type == 1:
        return (p, p + 1)
    return (p, p + 1, p + 1, p + 2)


class GeneralizedForm:
    __slots__ = ("n_type", "degree", "kind", "module", "slots")

    def __init__(self, n_type: int, degree: int, slots, kind: str, module=None):
        self.n_type = n_type
        self.degree = degree
        self.kind = kind
        self.module = module
        slots = tuple(slots)
        expect = _slot_degree_list(n_type, degree)
        if len(slots) != len(expect):
            raise ValueError(f"type {n_type} needs {len(expect)} slots")
        for s, d in zip(slots, expect):
            if s.degree != d:
                raise ValueError(f"slot degree {s.degree} != required {d}")
        if kind == "lie2":
            if not isinstance(module, CrossedModuleData):
                raise ValueError("lie2 profile needs crossed module data")
            algs = (module.g, module.h)
            for s, a in zip(slots, algs):
                if s.algebra is not a:
                    raise ValueError("slot value algebra mismatch")
        elif kind == "lie3":
            if not isinstance(module, TwoCrossedModuleData):
                raise ValueError("lie3 profile needs 2-crossed module data")
            algs = (module.g, module.h, module.h, module.l)
            for s, a in zip(slots, algs):
                if s.algebra is not a:
                    raise ValueError("slot value algebra mismatch")
        self.slots = slots

    # -- constructors --------------------------------------------------------

    @classmethod
    def real(cls, n_type: int, degree: int, slots):
        return cls(n_type, degree, slots, "real")

    @classmethod
    def matrix(cls, n_type: int, degree: int, slots):
        return cls(n_type, degree, slots, "matrix")

    @classmethod
    def lie2(cls, cm: CrossedModuleData, degree: int, U, V):
        return cls(1, degree, (U, V), "lie2", cm)

    @classmethod
    def lie3(cls, tcm: TwoCrossedModuleData, degree: int, U, V, Vp, W):
        return cls(2, degree, (U, V, Vp, W), "lie3", tcm)

    @classmethod
    def zero_like(cls, other: "GeneralizedForm", degree: int):
        slots = [_zero_slot(s, d) for s, d in
                 zip(other.slots, _slot_degree_list(other.n_type, degree))]
        return cls(other.n_type, degree, slots, other.kind, other.module)

    @classmethod
    def zero_real(cls, n_type: int, dim: int, degree: int):
        return cls(n_type, degree,
                   [OrdinaryForm(dim, d) for d in _slot_degree_list(n_type, degree)],
                   "real")

    # -- structure -----------------------------------------------------------

    @property
    def dim(self):
        return self.slots[0].dim

    def is_zero(self) -> bool:
        return all(s.is_zero() for s in self.slots)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GeneralizedForm)
            and self.n_type == other.n_type
            and self.degree == other.degree
            and self.kind == other.kind
            and self.module is other.module
            and self.slots == other.slots
        )

    def _compatible(self, other):
        if self.n_type != other.n_type or self.kind != other.kind:
            raise ValueError("generalized form type/profile mismatch")
        if self.module is not other.module:
            raise ValueError("generalized form module mismatch")

    def __add__(self, other: "GeneralizedForm") -> "GeneralizedForm":
        self._compatible(other)
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return GeneralizedForm(self.n_type, self.degree,
                               [a + b for a, b in zip(self.slots, other.slots)],
                               self.kind, self.module)

    def __neg__(self):
        return GeneralizedForm(self.n_type, self.degree, [-s for s in self.slots],
                               self.kind, self.module)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "GeneralizedForm":
        return GeneralizedForm(self.n_type, self.degree,
                               [s.scale(c) for s in self.slots], self.kind, self.module)

    def __repr__(self):
        names = {0: ("U",), 1: ("U", "V"), 2: ("U", "V", "V'", "W")}[self.n_type]
        body = ", ".join(f"{n}={s!r}" for n, s in zip(names, self.slots))
        return f"GeneralizedForm[{self.kind}, N={self.n_type}, p={self.degree}]({body})"


def _zero_slot(proto, degree):
    if isinstance(proto, OrdinaryForm):
        return OrdinaryForm(proto.dim, degree)
    if isinstance(proto, MatrixForm):
        return MatrixForm.zero(proto.size, proto.dim, degree)
    return AlgebraValuedForm(proto.algebra, proto.dim, degree)


def _slot_mul(x, y):
    """Exterior product of two slot values (scalar extension when mixed)."""
    if isinstance(x, OrdinaryForm):
        if isinstance(y, OrdinaryForm):
            return x.wedge(y)
        if isinstance(y, AlgebraValuedForm):
            return y.wedge_scalar_left(x)
        if isinstance(y, MatrixForm):
            return y.scale_form_left(x)
    if isinstance(x, AlgebraValuedForm) and isinstance(y, OrdinaryForm):
        return x.wedge_scalar_right(y)
    if isinstance(x, MatrixForm):
        if isinstance(y, MatrixForm):
            return x.matmul(y)
        if isinstance(y, OrdinaryForm):
            return x.scale_form_right(y)
    raise TypeError("unsupported slot product; algebra-valued forms multiply only "
                    "through gbracket/gpairing")


def gwedge(w1: GeneralizedForm, w2: GeneralizedForm) -> GeneralizedForm:
    """Exterior product of generalized forms (real/matrix, or scalar extension)."""
    if w1.n_type != w2.n_type:
        raise ValueError("type mismatch")
    if w1.kind == w2.kind == "lie2" or w1.kind == w2.kind == "lie3":
        raise TypeError("algebra-valued forms have no exterior product; "
                        "use gbracket or gpairing")
    kind = w1.kind if w1.kind != "real" else w2.kind
    module = w1.module if w1.module is not None else w2.module
    p, q = w1.degree, w2.degree
    sq = -1 if q & 1 else 1
    if w1.n_type == 0:
        return GeneralizedForm(0, p + q, (_slot_mul(w1.slots[0], w2.slots[0]),), kind, module)
    if w1.n_type == 1:
        a, a1 = w1.slots
        b, b1 = w2.slots
        u = _slot_mul(a, b)
        v = _slot_mul(a, b1) + _slot_mul(a1, b).scale(sq)
        return GeneralizedForm(1, p + q, (u, v), kind, module)
    a, a1, a2, at = w1.slots
    b, b1, b2, bt = w2.slots
    u = _slot_mul(a, b)
    v1 = _slot_mul(a, b1) + _slot_mul(a1, b).scale(sq)
    v2 = _slot_mul(a, b2) + _slot_mul(a2, b).scale(sq)
    top = (
        _slot_mul(a, bt)
        + _slot_mul(a1, b2).scale(-sq)
        + _slot_mul(a2, b1).scale(sq)
        + _slot_mul(at, b)
    )
    return GeneralizedForm(2, p + q, (u, v1, v2, top), kind, module)


def gderiv(w: GeneralizedForm, ctx: DerivativeContext) -> GeneralizedForm:
    """Type-aware exterior derivative with the context's constants."""
    if ctx.n_type != w.n_type:
        raise ValueError("context type does not match form type")
    p = w.degree
    sp = -1 if (p + 1) & 1 else 1  # (-1)^{p+1}
    if w.n_type == 0:
        return GeneralizedForm(0, p + 1, (w.slots[0].d(),), w.kind, w.module)
    if w.n_type == 1:
        U, V = w.slots
        if w.kind == "lie2":
            lower = apply_alpha(w.module, V).scale(ctx.k * sp)
        else:
            lower = V.scale(ctx.k * sp)
        return GeneralizedForm(1, p + 1, (U.d() + lower, V.d()), w.kind, w.module)
    U, V, Vp, W = w.slots
    if w.kind == "lie3":
        lower = apply_linear(w.module.alpha,
                             V.scale(ctx.k1) + Vp.scale(ctx.k2), w.module.g).scale(sp)
        bw = apply_beta(w.module, W)
        u = U.d() + lower
        v = V.d() + bw.scale(ctx.k2 * sp)
        vp = Vp.d() + bw.scale(-ctx.k1 * sp)
        return GeneralizedForm(2, p + 1, (u, v, vp, W.d()), w.kind, w.module)
    u = U.d() + (V.scale(ctx.k1) + Vp.scale(ctx.k2)).scale(sp)
    v = V.d() + W.scale(ctx.k2 * sp)
    vp = Vp.d() + W.scale(-ctx.k1 * sp)
    return GeneralizedForm(2, p + 1, (u, v, vp, W.d()), w.kind, w.module)


def gbracket(w1: GeneralizedForm, w2: GeneralizedForm) -> GeneralizedForm:
    """Graded Lie bracket.

    For matrix profiles this is w1 ^ w2 - (-1)^{pq} w2 ^ w1; for lie2/lie3
    profiles it is the higher-algebra bracket combining [.,.], the action
    and (for N=2) the Peiffer lifting.
    """
    p, q = w1.degree, w2.degree
    spq = -1 if (p * q) & 1 else 1
    if w1.kind == "matrix" and w2.kind == "matrix":
        return gwedge(w1, w2) - gwedge(w2, w1).scale(spq)
    w1._compatible(w2)
    mod = w1.module
    if w1.kind == "lie2":
        U1, V1 = w1.slots
        U2, V2 = w2.slots
        u = bracket(U1, U2)
        v = act(mod, U1, V2) - act(mod, U2, V1).scale(spq)
        return GeneralizedForm(1, p + q, (u, v), "lie2", mod)
    if w1.kind == "lie3":
        U1, V1, V1p, W1 = w1.slots
        U2, V2, V2p, W2 = w2.slots
        u = bracket(U1, U2)
        v = act(mod, U1, V2) - act(mod, U2, V1).scale(spq)
        vp = act(mod, U1, V2p) - act(mod, U2, V1p).scale(spq)
        sq1 = -1 if (q + 1) & 1 else 1                  # (-1)^{q+1}
        spqp1 = -1 if (p * q + p + 1) & 1 else 1        # (-1)^{pq+p+1}
        top = (
            act(mod, U1, W2)
            - act(mod, U2, W1).scale(spq)
            + peiffer(mod, V1, V2p).scale(sq1)
            - peiffer(mod, V2, V1p).scale(spqp1)
        )
        return GeneralizedForm(2, p + q, (u, v, vp, top), "lie3", mod)
    raise TypeError("gbracket needs matrix or higher-algebra profiles")


def gpairing(w1: GeneralizedForm, w2: GeneralizedForm, pairing,
             ctx: DerivativeContext | None = None) -> OrdinaryForm:
    """Graded symmetric bilinear pairing, collapsed to its real coefficient.

    For N=1 the value is the ordinary (p+q+1)-form <U1,V2> + (-1)^{pq}<U2,V1>;
    for N=2 it is the (p+q+2)-form with the -k1/-k2 cross terms, the constants
    coming from the ambient derivative context.
    """
    w1._compatible(w2)
    p, q = w1.degree, w2.degree
    spq = -1 if (p * q) & 1 else 1
    if w1.kind == "lie2":
        if pairing.pairing_gh is None:
            raise ValueError("pairing_gh missing")
        U1, V1 = w1.slots
        U2, V2 = w2.slots
        out = pair_forms(pairing.pairing_gh, U1, V2)
        return out + pair_forms(pairing.pairing_gh, U2, V1).scale(spq)
    if w1.kind == "lie3":
        if pairing.pairing_gl is None or pairing.pairing_h_anti is None:
            raise ValueError("pairing_gl / pairing_h_anti missing")
        if ctx is None or ctx.n_type != 2:
            raise ValueError("type N=2 pairing needs the (k1, k2) context")
        U1, V1, V1p, W1 = w1.slots
        U2, V2, V2p, W2 = w2.slots
        out = pair_forms(pairing.pairing_gl, U1, W2)
        out = out + pair_forms(pairing.pairing_gl, U2, W1).scale(spq)
        out = out + pair_forms(pairing.pairing_h_anti, V1, V2p).scale(-ctx.k1)
        # second cross term with the argument order of the published
        # component expansions (the antisymmetric h-form is order-sensitive)
        out = out + pair_forms(pairing.pairing_h_anti, V1p, V2).scale(-ctx.k2 * spq)
        return out
    raise TypeError("gpairing needs a higher-algebra profile")


def ginner(w1: GeneralizedForm, w2: GeneralizedForm, pairing=None) -> Fraction:
    """Symmetric inner product: slotwise Euclidean inner products, summed."""
    w1._compatible(w2)
    if w1.degree != w2.degree:
        raise ValueError("inner product needs equal degrees")
    if w1.kind == "real":
        total = Fraction(0)
        for a, b in zip(w1.slots, w2.slots):
            total += a.inner(b)
        return total
    if w1.kind == "lie2":
        U1, V1 = w1.slots
        U2, V2 = w2.slots
        return inner_sym(pairing.sym_g, U1, U2) + inner_sym(pairing.sym_h, V1, V2)
    if w1.kind == "lie3":
        U1, V1, V1p, W1 = w1.slots
        U2, V2, V2p, W2 = w2.slots
        return (
            inner_sym(pairing.sym_g, U1, U2)
            + inner_sym(pairing.sym_h, V1, V2)
            + inner_sym(pairing.sym_h, V1p, V2p)
            + inner_sym(pairing.sym_l, W1, W2)
        )
    raise TypeError("ginner supports real and higher-algebra profiles")


def split(w: GeneralizedForm):
    """Write a type-N form as a pair of type-(N-1) forms (peeling xi^N)."""
    if w.n_type == 0:
        raise ValueError("cannot split a type-0 form")
    if w.kind not in ("real", "matrix"):
        raise TypeError("split of higher-algebra profiles mixes value algebras; "
                        "use the slot tuple directly")
    if w.n_type == 1:
        U, V = w.slots
        return (
            GeneralizedForm(0, w.degree, (U,), w.kind, w.module),
            GeneralizedForm(0, w.degree + 1, (V,), w.kind, w.module),
        )
    U, V, Vp, W = w.slots
    return (
        GeneralizedForm(1, w.degree, (U, V), w.kind, w.module),
        GeneralizedForm(1, w.degree + 1, (Vp, W), w.kind, w.module),
    )


def join(first: GeneralizedForm, second: GeneralizedForm) -> GeneralizedForm:
    """Inverse of `split`: first + second * xi^N."""
    if first.n_type != second.n_type or first.degree + 1 != second.degree:
        raise ValueError("join needs type-(N-1) forms of degrees (p, p+1)")
    if first.n_type == 0:
        return GeneralizedForm(1, first.degree, (first.slots[0], second.slots[0]),
                               first.kind, first.module)
    U, V = first.slots
    Vp, W = second.slots
    return GeneralizedForm(2, first.degree, (U, V, Vp, W), first.kind, first.module)
