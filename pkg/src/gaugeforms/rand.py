"""Seeded deterministic generation of random polynomial data.

Property suites and the CLI draw every random object from a `Rand` wrapped
around `random.Random(seed)`, so identical (scenario, seed) pairs reproduce
identical inputs byte for byte.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .poly import Polynomial
from .forms import OrdinaryForm
from .algebra import AlgebraValuedForm
from .matform import MatrixForm, UnipotentMatrixFunction
from .genform import DerivativeContext, GeneralizedForm
from .group import GroupRealization, GroupValuedZeroForm


class Rand:
    def __init__(self, seed: int, max_degree: int = 2, max_terms: int = 2):
        self.r = random.Random(seed)
        self.max_degree = max_degree
        self.max_terms = max_terms

    def fraction(self, zero_ok: bool = True) -> Fraction:
        num = self.r.randint(-2, 2)
        if not zero_ok:
            while num == 0:
                num = self.r.randint(-2, 2)
        return Fraction(num, self.r.choice((1, 1, 2)))

    def poly(self, dim: int, max_degree: int | None = None,
             max_terms: int | None = None) -> Polynomial:
        max_degree = self.max_degree if max_degree is None else max_degree
        max_terms = self.max_terms if max_terms is None else max_terms
        terms = {}
        for _ in range(self.r.randint(1, max_terms)):
            total = self.r.randint(0, max_degree)
            exps = [0] * dim
            for _ in range(total):
                exps[self.r.randrange(dim)] += 1
            c = self.fraction(zero_ok=False)
            key = tuple(exps)
            terms[key] = terms.get(key, Fraction(0)) + c
        return Polynomial(dim, terms)

    def form(self, dim: int, degree: int, n_comps: int = 2, **kw) -> OrdinaryForm:
        if degree < 0 or degree > dim:
            return OrdinaryForm(dim, degree)
        indices = sorted(range(1, dim + 1))
        comps = {}
        from itertools import combinations
        pool = list(combinations(indices, degree))
        self.r.shuffle(pool)
        for I in pool[: max(1, min(n_comps, len(pool)))]:
            comps[I] = self.poly(dim, **kw)
        return OrdinaryForm(dim, degree, comps)

    def avf(self, algebra, dim: int, degree: int, sparse: bool = True,
            n_comps: int = 1, **kw) -> AlgebraValuedForm:
        comps = []
        for _ in range(algebra.dim):
            if sparse and algebra.dim > 2 and self.r.random() < 0.4:
                comps.append(OrdinaryForm(dim, degree))
            else:
                comps.append(self.form(dim, degree, n_comps=n_comps, **kw))
        return AlgebraValuedForm(algebra, dim, degree, comps)

    def matrix_form(self, size: int, dim: int, degree: int, strictly_upper: bool = True,
                    **kw) -> MatrixForm:
        rows = []
        for i in range(size):
            row = []
            for j in range(size):
                if strictly_upper and j <= i:
                    row.append(OrdinaryForm(dim, degree))
                else:
                    row.append(self.form(dim, degree, n_comps=1, **kw))
            rows.append(row)
        return MatrixForm(size, dim, degree, rows)

    def unipotent(self, size: int, dim: int, **kw) -> UnipotentMatrixFunction:
        one = OrdinaryForm.constant(dim, 1)
        zero = OrdinaryForm(dim, 0)
        rows = []
        for i in range(size):
            row = []
            for j in range(size):
                if j == i:
                    row.append(one)
                elif j < i:
                    row.append(zero)
                else:
                    row.append(OrdinaryForm.from_poly(self.poly(dim, **kw)))
            rows.append(row)
        return UnipotentMatrixFunction(MatrixForm(size, dim, 0, rows))

    def context(self, n_type: int, equal_k: bool = False) -> DerivativeContext:
        if n_type == 1:
            return DerivativeContext(1, k=self.fraction())
        k1 = self.fraction()
        k2 = k1 if equal_k else self.fraction()
        return DerivativeContext(2, k1=k1, k2=k2)

    def generalized(self, n_type: int, dim: int, degree: int, **kw) -> GeneralizedForm:
        if n_type == 0:
            return GeneralizedForm.real(0, degree, (self.form(dim, degree, **kw),))
        if n_type == 1:
            return GeneralizedForm.real(
                1, degree, (self.form(dim, degree, **kw), self.form(dim, degree + 1, **kw)))
        return GeneralizedForm.real(2, degree, (
            self.form(dim, degree, **kw),
            self.form(dim, degree + 1, **kw),
            self.form(dim, degree + 1, **kw),
            self.form(dim, degree + 2, **kw),
        ))

    def generalized_lie2(self, cm, dim: int, degree: int, **kw) -> GeneralizedForm:
        return GeneralizedForm.lie2(cm, degree,
                                    self.avf(cm.g, dim, degree, **kw),
                                    self.avf(cm.h, dim, degree + 1, **kw))

    def generalized_lie3(self, tcm, dim: int, degree: int, **kw) -> GeneralizedForm:
        return GeneralizedForm.lie3(tcm, degree,
                                    self.avf(tcm.g, dim, degree, **kw),
                                    self.avf(tcm.h, dim, degree + 1, **kw),
                                    self.avf(tcm.h, dim, degree + 1, **kw),
                                    self.avf(tcm.l, dim, degree + 2, **kw))

    def group_matrix(self, real: GroupRealization, dim: int, **kw) -> UnipotentMatrixFunction:
        if real.sample_mode == "full":
            return self.unipotent(real.rep_size, dim, **kw)
        xi = self.avf(real.algebra, dim, 0, **kw)
        return real.exp(xi)

    def group1(self, model, dim: int, **kw) -> GroupValuedZeroForm:
        g = self.group_matrix(model.group, dim, **kw)
        phi = self.avf(model.module.h, dim, 1, **kw)
        return GroupValuedZeroForm(model.group, model.module, 1, g, phi)

    def group2(self, model, dim: int, simplified: bool = True, **kw) -> GroupValuedZeroForm:
        g = self.group_matrix(model.group, dim, **kw)
        tcm = model.module
        phi = self.avf(tcm.h, dim, 1, **kw)
        phi2 = AlgebraValuedForm(tcm.h, dim, 1) if simplified else self.avf(tcm.h, dim, 1, **kw)
        psi = self.avf(tcm.l, dim, 2, **kw)
        return GroupValuedZeroForm(model.group, tcm, 2, g, phi, phi2, psi)

    def two_connection(self, model, dim: int, **kw):
        from .gauge import TwoConnection
        cm = model.module
        return TwoConnection(cm, self.avf(cm.g, dim, 1, **kw), self.avf(cm.h, dim, 2, **kw))

    def three_connection(self, model, dim: int, **kw):
        from .gauge import ThreeConnection
        tcm = model.module
        return ThreeConnection(tcm, self.avf(tcm.g, dim, 1, **kw),
                               self.avf(tcm.h, dim, 2, **kw),
                               self.avf(tcm.l, dim, 3, **kw))
