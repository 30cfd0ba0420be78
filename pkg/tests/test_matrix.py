"""Matrix-valued forms, unipotent matrices, and the plain matrix picture."""

from fractions import Fraction as Q

import pytest

from gaugeforms.forms import OrdinaryForm
from gaugeforms.matform import MatrixForm, UnipotentMatrixFunction
from gaugeforms.genform import DerivativeContext, GeneralizedForm, gderiv, gwedge
from gaugeforms import gauge


def up(rng, r, dim, degree, **kw):
    return rng.matrix_form(r, dim, degree, strictly_upper=True, **kw)


class TestMatrixForm:
    def test_matmul_associative(self, rng):
        a = rng.matrix_form(3, 3, 1, strictly_upper=False)
        b = rng.matrix_form(3, 3, 1, strictly_upper=False)
        c = rng.matrix_form(3, 3, 0, strictly_upper=False)
        assert a.matmul(b).matmul(c) == a.matmul(b.matmul(c))

    def test_d_leibniz(self, rng):
        a = rng.matrix_form(3, 3, 1, strictly_upper=False)
        b = rng.matrix_form(3, 3, 1, strictly_upper=False)
        lhs = a.matmul(b).d()
        rhs = a.d().matmul(b) - a.matmul(b.d())
        assert (lhs - rhs).is_zero()

    def test_commutator_self_degree1(self, rng):
        a = rng.matrix_form(3, 3, 1, strictly_upper=False)
        assert (a.commutator(a) - a.matmul(a).scale(2)).is_zero()


class TestUnipotent:
    def test_inverse_exact(self, rng):
        for _ in range(10):
            g = rng.unipotent(4, 3)
            ident = MatrixForm.identity(4, 3)
            assert (g.mat.matmul(g.inverse().mat) - ident).is_zero()
            assert (g.inverse().mat.matmul(g.mat) - ident).is_zero()

    def test_exp_of_nilpotent(self, rng):
        nil = rng.matrix_form(4, 3, 0, strictly_upper=True)
        g = UnipotentMatrixFunction.from_nilpotent(nil)
        assert g.mat.entries[0][0] == OrdinaryForm.constant(3, 1)
        assert (g.mul(g.inverse()).mat - MatrixForm.identity(4, 3)).is_zero()

    def test_rejects_nonunipotent(self):
        bad = MatrixForm.zero(2, 2, 0)
        with pytest.raises(ValueError):
            UnipotentMatrixFunction(bad)


class TestPlainElements:
    def test_product_matches_display(self, rng):
        # (1 + mu xi) pi (1 + mu' xi) pi' = (1 + (mu + pi mu' pi^{-1}) xi) pi pi'
        r, dim = 3, 3
        pi, pi2 = rng.unipotent(r, dim), rng.unipotent(r, dim)
        mu, mu2 = up(rng, r, dim, 1), up(rng, r, dim, 1)
        e1 = gauge.plain_element1(pi, mu)
        e2 = gauge.plain_element1(pi2, mu2)
        prod = gwedge(e1, e2)
        conj = pi.mat.matmul(mu2).matmul(pi.inverse().mat)
        expected = gauge.plain_element1(pi.mul(pi2), mu + conj)
        assert (prod - expected).is_zero()

    def test_inverse_matches_display(self, rng):
        # (1 + mu xi) pi inverse = (1 - pi^{-1} mu pi xi) pi^{-1}
        r, dim = 3, 3
        pi = rng.unipotent(r, dim)
        mu = up(rng, r, dim, 1)
        e = gauge.plain_element1(pi, mu)
        inv = gauge.plain_element_inverse(e)
        piinv = pi.inverse()
        expected = gauge.plain_element1(
            piinv, piinv.mat.matmul(mu).matmul(pi.mat).scale(-1))
        assert (inv - expected).is_zero()
        one = GeneralizedForm.matrix(1, 0, (MatrixForm.identity(r, dim),
                                            MatrixForm.zero(r, dim, 1)))
        assert (gwedge(e, inv) - one).is_zero()

    def test_type2_product_and_inverse_display(self, rng):
        # g = (1 + mu xi1 + mu' xi2 + (nu + mu' mu) xi1 xi2) pi and the
        # displayed inverse with -pi^{-1}(nu + mu' mu)pi in the top slot
        r, dim = 3, 3
        pi = rng.unipotent(r, dim)
        mu, mu2 = up(rng, r, dim, 1), up(rng, r, dim, 1)
        nu = up(rng, r, dim, 2)
        e = gauge.plain_element2(pi, mu, mu2, nu)
        inv = gauge.plain_element_inverse(e)
        piinv = pi.inverse()
        sand = lambda x: piinv.mat.matmul(x).matmul(pi.mat)
        top = nu + mu2.matmul(mu)
        expected = GeneralizedForm.matrix(2, 0, (
            piinv.mat,
            sand(mu).scale(-1).matmul(piinv.mat),
            sand(mu2).scale(-1).matmul(piinv.mat),
            sand(top).scale(-1).matmul(piinv.mat)))
        assert (inv - expected).is_zero()
        one = GeneralizedForm.matrix(2, 0, (
            MatrixForm.identity(r, dim), MatrixForm.zero(r, dim, 1),
            MatrixForm.zero(r, dim, 1), MatrixForm.zero(r, dim, 2)))
        assert (gwedge(e, inv) - one).is_zero()
        assert (gwedge(inv, e) - one).is_zero()


class TestPlainConnection:
    def test_curvature_display_type1(self, rng):
        r, dim = 3, 4
        for _ in range(5):
            ctx = rng.context(1)
            A1, A2 = up(rng, r, dim, 1), up(rng, r, dim, 2)
            a = gauge.plain_connection1(A1, A2)
            f = gauge.generalized_curvature(a, ctx)
            c0 = A1.d() + A1.matmul(A1) + A2.scale(ctx.k)
            c1 = A2.d() + A1.commutator(A2)
            assert (f.slots[0] - c0).is_zero()
            assert (f.slots[1] - c1).is_zero()
            assert gauge.plain_covariant_derivative(a, f, ctx).is_zero()

    def test_curvature_display_type2(self, rng):
        r, dim = 3, 4
        for _ in range(3):
            ctx = rng.context(2)
            k1, k2 = ctx.k1, ctx.k2
            A1, A2, A2p, A3 = (up(rng, r, dim, d) for d in (1, 2, 2, 3))
            a = gauge.plain_connection2(A1, A2, A2p, A3)
            f = gauge.generalized_curvature(a, ctx)
            c0 = A1.d() + A1.matmul(A1) + A2.scale(k1) + A2p.scale(k2)
            c1 = A2.d() + A1.commutator(A2) + A3.scale(k2)
            c2 = A2p.d() + A1.commutator(A2p) - A3.scale(k1)
            c3 = A3.d() + A1.commutator(A3) + A2.commutator(A2p)
            for s, c in zip(f.slots, (c0, c1, c2, c3)):
                assert (s - c).is_zero()
            assert gauge.plain_covariant_derivative(a, f, ctx).is_zero()

    def test_covariant_derivative_reductions(self, rng):
        r, dim = 3, 4
        ctx = rng.context(1)
        zero = GeneralizedForm.matrix(1, 1, (MatrixForm.zero(r, dim, 1),
                                             MatrixForm.zero(r, dim, 2)))
        w = GeneralizedForm.matrix(1, 2, (up(rng, r, dim, 2), up(rng, r, dim, 3)))
        # vanishing connection: D w = d w
        assert (gauge.plain_covariant_derivative(zero, w, ctx)
                - gderiv(w, ctx)).is_zero()

    def test_covariant_derivative_parity(self, rng):
        # sign flip between even and odd w against the direct expansion
        r, dim = 3, 4
        ctx = rng.context(1)
        A1, A2 = up(rng, r, dim, 1), up(rng, r, dim, 2)
        a = gauge.plain_connection1(A1, A2)
        for p in (1, 2):
            w = GeneralizedForm.matrix(1, p, (up(rng, r, dim, p), up(rng, r, dim, p + 1)))
            s = -1 if (p + 1) % 2 else 1
            expected = gderiv(w, ctx) + gwedge(a, w) + gwedge(w, a).scale(s)
            assert (gauge.plain_covariant_derivative(a, w, ctx) - expected).is_zero()

    def test_gauge_transform_display_type1(self, rng):
        r, dim = 3, 4
        for _ in range(3):
            ctx = rng.context(1)
            k = ctx.k
            A1, A2 = up(rng, r, dim, 1), up(rng, r, dim, 2)
            a = gauge.plain_connection1(A1, A2)
            pi = rng.unipotent(r, dim, max_degree=1)
            mu = up(rng, r, dim, 1, max_degree=1)
            e = gauge.plain_element1(pi, mu)
            at = gauge.plain_gauge_transform(a, e, ctx)
            piinv = pi.inverse()
            sw = lambda m: piinv.mat.matmul(m).matmul(pi.mat)
            d0 = piinv.mat.matmul(pi.d()) + sw(A1 - mu.scale(k))
            d1 = sw(mu.d() - mu.matmul(mu).scale(k)
                    + mu.matmul(A1) + A1.matmul(mu) + A2)
            assert (at.slots[0] - d0).is_zero()
            assert (at.slots[1] - d1).is_zero()
            # mu-only transform with pi = 1 and k = 0
            ctx0 = DerivativeContext(1, k=Q(0))
            e0 = gauge.plain_element1(UnipotentMatrixFunction.identity(r, dim), mu)
            at0 = gauge.plain_gauge_transform(a, e0, ctx0)
            assert (at0.slots[0] - A1).is_zero()
            assert (at0.slots[1] - (mu.d() + mu.matmul(A1) + A1.matmul(mu) + A2)).is_zero()

    def test_gauge_transform_display_type2(self, rng):
        r, dim = 3, 4
        for _ in range(2):
            ctx = rng.context(2)
            k1, k2 = ctx.k1, ctx.k2
            A1, A2, A2p, A3 = (up(rng, r, dim, d) for d in (1, 2, 2, 3))
            a = gauge.plain_connection2(A1, A2, A2p, A3)
            pi = rng.unipotent(r, dim, max_degree=1)
            mu = up(rng, r, dim, 1, max_degree=1)
            nu = up(rng, r, dim, 2, max_degree=1)
            e = gauge.plain_element2(pi, mu, MatrixForm.zero(r, dim, 1), nu)
            at = gauge.plain_gauge_transform(a, e, ctx)
            piinv = pi.inverse()
            sw = lambda m: piinv.mat.matmul(m).matmul(pi.mat)
            d0 = piinv.mat.matmul(pi.d()) + sw(A1 - mu.scale(k1))
            d1 = sw(mu.d() - mu.matmul(mu).scale(k1) - nu.scale(k2)
                    + A2 + A1.matmul(mu) + mu.matmul(A1))
            d2 = sw(nu.scale(k1) + A2p)
            d3 = sw(nu.d() + (nu.matmul(mu) - mu.matmul(nu)).scale(k1) + A3
                    + A1.matmul(nu) - nu.matmul(A1) + A2p.matmul(mu) - mu.matmul(A2p))
            for s, c in zip(at.slots, (d0, d1, d2, d3)):
                assert (s - c).is_zero()

    def test_curvature_conjugation_displays(self, rng):
        r, dim = 3, 4
        ctx = rng.context(1)
        A1, A2 = up(rng, r, dim, 1), up(rng, r, dim, 2)
        a = gauge.plain_connection1(A1, A2)
        f = gauge.generalized_curvature(a, ctx)
        pi = rng.unipotent(r, dim, max_degree=1)
        mu = up(rng, r, dim, 1, max_degree=1)
        e = gauge.plain_element1(pi, mu)
        ft = gauge.plain_conjugate(f, e)
        piinv = pi.inverse()
        sw = lambda m: piinv.mat.matmul(m).matmul(pi.mat)
        F2 = A1.d() + A1.matmul(A1)
        DA2 = A2.d() + A1.commutator(A2)
        FkA = F2 + A2.scale(ctx.k)
        assert (ft.slots[0] - sw(FkA)).is_zero()
        assert (ft.slots[1] - sw(DA2 + FkA.matmul(mu) - mu.matmul(FkA))).is_zero()
        # transformed curvature equals curvature of the transformed connection
        at = gauge.plain_gauge_transform(a, e, ctx)
        assert (gauge.generalized_curvature(at, ctx) - ft).is_zero()

    def test_curvature_conjugation_display_type2(self, rng):
        r, dim = 3, 4
        ctx = rng.context(2)
        A1, A2, A2p, A3 = (up(rng, r, dim, d) for d in (1, 2, 2, 3))
        a = gauge.plain_connection2(A1, A2, A2p, A3)
        f = gauge.generalized_curvature(a, ctx)
        pi = rng.unipotent(r, dim, max_degree=1)
        mu = up(rng, r, dim, 1, max_degree=1)
        nu = up(rng, r, dim, 2, max_degree=1)
        e = gauge.plain_element2(pi, mu, MatrixForm.zero(r, dim, 1), nu)
        ft = gauge.plain_conjugate(f, e)
        piinv = pi.inverse()
        sw = lambda m: piinv.mat.matmul(m).matmul(pi.mat)
        F2, F3, F3p, F4 = f.slots
        assert (ft.slots[0] - sw(F2)).is_zero()
        assert (ft.slots[1] - sw(F3 + F2.matmul(mu) - mu.matmul(F2))).is_zero()
        assert (ft.slots[2] - sw(F3p)).is_zero()
        assert (ft.slots[3] - sw(F4 + F2.matmul(nu) - nu.matmul(F2)
                                 + F3p.matmul(mu) + mu.matmul(F3p))).is_zero()
