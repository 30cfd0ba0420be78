"""Structured-text (JSON) encoding of all engine values.

Rationals serialize as "num/den" strings so exactness survives round trips;
every encoder emits canonically ordered content (sorted exponent tuples,
sorted index tuples), making re-serialization byte-identical.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial, as_fraction, frac_str
from .forms import OrdinaryForm
from .algebra import (
    AlgebraValuedForm,
    CrossedModuleData,
    LieAlgebraData,
    PairingData,
    TwoCrossedModuleData,
)
from .matform import MatrixForm, UnipotentMatrixFunction
from .genform import GeneralizedForm


# -- rationals / polynomials ---------------------------------------------------

def poly_to_obj(p: Polynomial) -> list:
    return [
        {"exps": list(exps), "coeff": frac_str(p.terms[exps])}
        for exps in sorted(p.terms)
    ]


def poly_from_obj(dim: int, obj) -> Polynomial:
    terms = {}
    for t in obj:
        exps = tuple(int(e) for e in t["exps"])
        c = as_fraction(t["coeff"])
        terms[exps] = terms.get(exps, Fraction(0)) + c
    return Polynomial(dim, terms)


# -- ordinary forms --------------------------------------------------------------

def form_to_obj(f: OrdinaryForm) -> dict:
    return {
        "dim": f.dim,
        "degree": f.degree,
        "components": [
            {"indices": list(I), "poly": poly_to_obj(f.comps[I])}
            for I in sorted(f.comps)
        ],
    }


def form_from_obj(obj) -> OrdinaryForm:
    dim = int(obj["dim"])
    degree = int(obj["degree"])
    comps = {}
    for c in obj["components"]:
        I = tuple(int(i) for i in c["indices"])
        comps[I] = poly_from_obj(dim, c["poly"])
    return OrdinaryForm(dim, degree, comps)


# -- algebra-valued forms ----------------------------------------------------------

def avf_to_obj(a: AlgebraValuedForm) -> dict:
    return {
        "algebra": a.algebra.name,
        "dim": a.dim,
        "degree": a.degree,
        "components": [form_to_obj(c) for c in a.comps],
    }


def avf_from_obj(obj, algebra: LieAlgebraData) -> AlgebraValuedForm:
    comps = [form_from_obj(c) for c in obj["components"]]
    return AlgebraValuedForm(algebra, int(obj["dim"]), int(obj["degree"]), comps)


# -- matrices -----------------------------------------------------------------------

def matrix_to_obj(m: MatrixForm) -> dict:
    return {
        "size": m.size,
        "dim": m.dim,
        "degree": m.degree,
        "entries": [[form_to_obj(e) for e in row] for row in m.entries],
    }


def matrix_from_obj(obj) -> MatrixForm:
    entries = [[form_from_obj(e) for e in row] for row in obj["entries"]]
    return MatrixForm(int(obj["size"]), int(obj["dim"]), int(obj["degree"]), entries)


def unipotent_to_obj(u: UnipotentMatrixFunction) -> dict:
    return {
        "size": u.size,
        "dim": u.dim,
        "entries": [[poly_to_obj(_poly0(e)) for e in row] for row in u.mat.entries],
    }


def _poly0(f: OrdinaryForm) -> Polynomial:
    return f.comps.get((), Polynomial.zero(f.dim))


def unipotent_from_obj(obj) -> UnipotentMatrixFunction:
    dim = int(obj["dim"])
    rows = [
        [OrdinaryForm.from_poly(poly_from_obj(dim, e)) for e in row]
        for row in obj["entries"]
    ]
    return UnipotentMatrixFunction(MatrixForm(int(obj["size"]), dim, 0, rows))


# -- generalized forms ------------------------------------------------------------

def genform_to_obj(w: GeneralizedForm) -> dict:
    if w.kind == "real":
        slots = [form_to_obj(s) for s in w.slots]
    elif w.kind == "matrix":
        slots = [matrix_to_obj(s) for s in w.slots]
    else:
        slots = [avf_to_obj(s) for s in w.slots]
    return {
        "n_type": w.n_type,
        "degree": w.degree,
        "profile": w.kind,
        "module": getattr(w.module, "name", None),
        "slots": slots,
    }


def genform_from_obj(obj, module=None) -> GeneralizedForm:
    kind = obj["profile"]
    if kind == "real":
        slots = [form_from_obj(s) for s in obj["slots"]]
    elif kind == "matrix":
        slots = [matrix_from_obj(s) for s in obj["slots"]]
    elif kind == "lie2":
        algs = (module.g, module.h)
        slots = [avf_from_obj(s, a) for s, a in zip(obj["slots"], algs)]
    else:
        algs = (module.g, module.h, module.h, module.l)
        slots = [avf_from_obj(s, a) for s, a in zip(obj["slots"], algs)]
    return GeneralizedForm(int(obj["n_type"]), int(obj["degree"]), slots, kind, module)


# -- algebra data -------------------------------------------------------------------

def _mat_to_obj(mat):
    return None if mat is None else [[frac_str(x) for x in row] for row in mat]


def _mat_from_obj(obj):
    return None if obj is None else [[as_fraction(x) for x in row] for row in obj]


def _tensor_to_obj(t):
    return [[[frac_str(x) for x in row] for row in m] for m in t]


def _tensor_from_obj(obj):
    return [[[as_fraction(x) for x in row] for row in m] for m in obj]


def lie_algebra_to_obj(alg: LieAlgebraData) -> dict:
    return {
        "name": alg.name,
        "dim": alg.dim,
        "basis": list(alg.basis),
        "f": _tensor_to_obj(alg.f),
    }


def lie_algebra_from_obj(obj) -> LieAlgebraData:
    return LieAlgebraData(obj["name"], int(obj["dim"]), _tensor_from_obj(obj["f"]),
                          basis=obj.get("basis"))


def crossed_to_obj(cm: CrossedModuleData) -> dict:
    return {
        "name": cm.name,
        "g": lie_algebra_to_obj(cm.g),
        "h": lie_algebra_to_obj(cm.h),
        "alpha": _mat_to_obj(cm.alpha),
        "action": _tensor_to_obj(cm.act),
    }


def crossed_from_obj(obj) -> CrossedModuleData:
    return CrossedModuleData(
        obj["name"],
        lie_algebra_from_obj(obj["g"]),
        lie_algebra_from_obj(obj["h"]),
        _mat_from_obj(obj["alpha"]),
        _tensor_from_obj(obj["action"]),
    )


def two_crossed_to_obj(tcm: TwoCrossedModuleData) -> dict:
    return {
        "name": tcm.name,
        "g": lie_algebra_to_obj(tcm.g),
        "h": lie_algebra_to_obj(tcm.h),
        "l": lie_algebra_to_obj(tcm.l),
        "alpha": _mat_to_obj(tcm.alpha),
        "beta": _mat_to_obj(tcm.beta),
        "action_h": _tensor_to_obj(tcm.act_h),
        "action_l": _tensor_to_obj(tcm.act_l),
        "peiffer": _tensor_to_obj(tcm.peiffer),
        "fine": tcm.fine,
        "abelian_h": tcm.abelian_h,
    }


def two_crossed_from_obj(obj) -> TwoCrossedModuleData:
    return TwoCrossedModuleData(
        obj["name"],
        lie_algebra_from_obj(obj["g"]),
        lie_algebra_from_obj(obj["h"]),
        lie_algebra_from_obj(obj["l"]),
        _mat_from_obj(obj["alpha"]),
        _mat_from_obj(obj["beta"]),
        _tensor_from_obj(obj["action_h"]),
        _tensor_from_obj(obj["action_l"]),
        _tensor_from_obj(obj["peiffer"]),
        fine=obj.get("fine"),
        abelian_h=obj.get("abelian_h"),
    )


def pairing_to_obj(p: PairingData) -> dict:
    return {
        "pairing_gh": _mat_to_obj(p.pairing_gh),
        "pairing_gl": _mat_to_obj(p.pairing_gl),
        "pairing_h_anti": _mat_to_obj(p.pairing_h_anti),
        "sym_g": _mat_to_obj(p.sym_g),
        "sym_h": _mat_to_obj(p.sym_h),
        "sym_l": _mat_to_obj(p.sym_l),
    }


def pairing_from_obj(obj) -> PairingData:
    return PairingData(
        pairing_gh=_mat_from_obj(obj.get("pairing_gh")),
        pairing_gl=_mat_from_obj(obj.get("pairing_gl")),
        pairing_h_anti=_mat_from_obj(obj.get("pairing_h_anti")),
        sym_g=_mat_from_obj(obj.get("sym_g")),
        sym_h=_mat_from_obj(obj.get("sym_h")),
        sym_l=_mat_from_obj(obj.get("sym_l")),
    )


# -- group elements ------------------------------------------------------------------

def group_element_to_obj(G) -> dict:
    obj = {
        "n_type": G.n_type,
        "g": unipotent_to_obj(G.g),
        "phi": avf_to_obj(G.phi),
    }
    if G.n_type == 2:
        obj["phi2"] = avf_to_obj(G.phi2)
        obj["psi"] = avf_to_obj(G.psi)
    return obj
