"""Independent oracle implementations used to freeze expected values.

These deliberately avoid the code paths they check: wedge signs come from
explicit transposition counting, derivatives from per-coefficient partials,
integrals from the closed-form monomial rule, and brackets from a brute
double sum over basis pairs.
"""

from fractions import Fraction

from gaugeforms.poly import Polynomial
from gaugeforms.forms import OrdinaryForm
from gaugeforms.algebra import AlgebraValuedForm


def perm_sign(seq) -> int:
    """Sign of a permutation given as a duplicate-free sequence, by counting
    inversions one swap at a time (bubble sort)."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                sign = -sign
    return sign


def wedge_oracle(a: OrdinaryForm, b: OrdinaryForm) -> OrdinaryForm:
    """Exterior product via explicit permutation signs on index tuples."""
    deg = a.degree + b.degree
    out = OrdinaryForm(a.dim, deg)
    if deg > a.dim:
        return out
    for I, p in a.comps.items():
        for J, q in b.comps.items():
            seq = list(I) + list(J)
            if len(set(seq)) != len(seq):
                continue
            sign = perm_sign(seq)
            K = tuple(sorted(seq))
            term = OrdinaryForm(a.dim, deg, {K: (p * q).scale(sign)})
            out = out + term
    return out


def ext_d_oracle(a: OrdinaryForm) -> OrdinaryForm:
    """d(f dx^I) = sum_v (partial_v f) dx^v ^ dx^I, assembled with the wedge
    oracle."""
    out = OrdinaryForm(a.dim, a.degree + 1)
    for I, p in a.comps.items():
        for v in range(1, a.dim + 1):
            dp = p.partial(v)
            if dp.is_zero():
                continue
            dv = OrdinaryForm(a.dim, 1, {(v,): dp})
            base = OrdinaryForm(a.dim, a.degree, {I: Polynomial.constant(a.dim, 1)})
            out = out + wedge_oracle(dv, base)
    return out


def hodge_oracle(a: OrdinaryForm) -> OrdinaryForm:
    out = OrdinaryForm(a.dim, a.dim - a.degree)
    for I, p in a.comps.items():
        Ic = tuple(k for k in range(1, a.dim + 1) if k not in I)
        sign = perm_sign(list(I) + list(Ic))
        out = out + OrdinaryForm(a.dim, a.dim - a.degree, {Ic: p.scale(sign)})
    return out


def integrate_monomial_oracle(p: Polynomial) -> Fraction:
    total = Fraction(0)
    for exps, c in p.terms.items():
        w = c
        for e in exps:
            w *= Fraction(1, e + 1)
        total += w
    return total


def bracket_oracle(A: AlgebraValuedForm, B: AlgebraValuedForm) -> AlgebraValuedForm:
    """[A, B] by brute double sum over basis pairs with the wedge oracle."""
    alg = A.algebra
    deg = A.degree + B.degree
    comps = [OrdinaryForm(A.dim, deg) for _ in range(alg.dim)]
    for a in range(alg.dim):
        for b in range(alg.dim):
            w = wedge_oracle(A.comps[a], B.comps[b])
            if w.is_zero():
                continue
            for c in range(alg.dim):
                coeff = alg.f[a][b][c]
                if coeff:
                    comps[c] = comps[c] + w.scale(coeff)
    return AlgebraValuedForm(alg, A.dim, deg, comps)


def jacobi_oracle(f) -> list:
    """Triple loop over basis indices; returns violating triples."""
    n = len(f)
    bad = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                res = [Fraction(0)] * n
                for d in range(n):
                    for e in range(n):
                        res[e] += f[a][b][d] * f[d][c][e]
                        res[e] += f[b][c][d] * f[d][a][e]
                        res[e] += f[c][a][d] * f[d][b][e]
                if any(res):
                    bad.append((a, b, c))
    return bad
