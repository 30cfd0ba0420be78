"""Type-N calculus: split/join, product, derivative, bracket, pairings."""

from fractions import Fraction as Q

import pytest

from gaugeforms.poly import Polynomial
from gaugeforms.forms import OrdinaryForm
from gaugeforms.algebra import AlgebraValuedForm
from gaugeforms.genform import (
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


def x(dim, i):
    return OrdinaryForm.from_poly(Polynomial.variable(dim, i))


def dx(dim, *idx):
    return OrdinaryForm.dx(dim, *idx)


class TestSplitJoin:
    def test_type1(self):
        U, V = dx(3, 1), dx(3, 1, 2)
        w = GeneralizedForm.real(1, 1, (U, V))
        a, b = split(w)
        assert a.slots[0] == U and b.slots[0] == V
        assert join(a, b) == w

    def test_type2_regrouping(self, rng):
        # peeling the last basis element pairs (U, V) and (V', W)
        w = rng.generalized(2, 4, 1)
        a, b = split(w)
        assert a.slots == (w.slots[0], w.slots[1])
        assert b.slots == (w.slots[2], w.slots[3])
        assert join(a, b) == w

    def test_round_trip_random(self, rng):
        for _ in range(30):
            w = rng.generalized(rng.r.choice((1, 2)), 4, rng.r.randint(0, 2))
            assert join(*split(w)) == w

    def test_type0_errors(self):
        w = GeneralizedForm.real(0, 1, (dx(3, 1),))
        with pytest.raises(ValueError):
            split(w)

    def test_split_compatible_with_product(self, rng):
        # the recursive product formula in terms of the split pieces
        for _ in range(15):
            p, q = rng.r.randint(0, 2), rng.r.randint(0, 2)
            w1, w2 = rng.generalized(2, 3, p), rng.generalized(2, 3, q)
            a1, b1 = split(w1)
            a2, b2 = split(w2)
            sq = -1 if q % 2 else 1
            prod = gwedge(w1, w2)
            pa, pb = split(prod)
            assert (pa - gwedge(a1, a2)).is_zero()
            assert (pb - (gwedge(a1, b2) + gwedge(b1, a2).scale(sq))).is_zero()


class TestGeneralizedWedge:
    def test_worked_example(self):
        # (x1 dx1 + dx1^dx2 xi) ^ (x2 dx2 + dx2^dx3 xi)
        n = 3
        w1 = GeneralizedForm.real(1, 1, (x(n, 1).wedge(dx(n, 1)), dx(n, 1, 2)))
        w2 = GeneralizedForm.real(1, 1, (x(n, 2).wedge(dx(n, 2)), dx(n, 2, 3)))
        out = gwedge(w1, w2)
        x1x2 = Polynomial.variable(n, 1) * Polynomial.variable(n, 2)
        assert out.slots[0] == OrdinaryForm(n, 2, {(1, 2): x1x2})
        assert out.slots[1] == OrdinaryForm(n, 3, {(1, 2, 3): Polynomial.variable(n, 1)})

    def test_unit(self, rng):
        one = GeneralizedForm.real(1, 0, (OrdinaryForm.constant(4, 1), OrdinaryForm(4, 1)))
        w = rng.generalized(1, 4, 1)
        assert gwedge(w, one) == w
        assert gwedge(one, w) == w

    def test_graded_commutativity(self, rng):
        for n_type in (1, 2):
            for _ in range(25):
                p, q = rng.r.randint(0, 2), rng.r.randint(0, 2)
                w1 = rng.generalized(n_type, 4, p)
                w2 = rng.generalized(n_type, 4, q)
                s = -1 if (p * q) % 2 else 1
                assert (gwedge(w1, w2) - gwedge(w2, w1).scale(s)).is_zero()

    def test_associativity(self, rng):
        for n_type in (1, 2):
            for _ in range(15):
                ws = [rng.generalized(n_type, 4, rng.r.randint(0, 2)) for _ in range(3)]
                lhs = gwedge(gwedge(ws[0], ws[1]), ws[2])
                rhs = gwedge(ws[0], gwedge(ws[1], ws[2]))
                assert (lhs - rhs).is_zero()

    def test_scalar_extension(self, rng, adjoint_sl2):
        w = rng.generalized(1, 4, 1)
        v = rng.generalized_lie2(adjoint_sl2.cm, 4, 1)
        out = gwedge(w, v)
        assert out.kind == "lie2"
        out2 = gwedge(v, w)
        assert out2.kind == "lie2"

    def test_algebra_product_rejected(self, rng, adjoint_sl2):
        v = rng.generalized_lie2(adjoint_sl2.cm, 4, 1)
        with pytest.raises(TypeError):
            gwedge(v, v)


class TestGeneralizedDerivative:
    def test_worked_example(self):
        # N=1, k=-1, w = x1 + (x2 dx1) xi
        n = 2
        ctx = DerivativeContext(1, k=Q(-1))
        w = GeneralizedForm.real(1, 0, (
            x(n, 1), OrdinaryForm(n, 1, {(1,): Polynomial.variable(n, 2)})))
        out = gderiv(w, ctx)
        assert out.slots[0] == dx(n, 1) + OrdinaryForm(n, 1, {(1,): Polynomial.variable(n, 2)})
        assert out.slots[1] == dx(n, 1, 2).scale(-1)  # d(x2 dx1) = dx2^dx1

    def test_nilpotent_all_contexts(self, rng):
        for _ in range(60):
            n_type = rng.r.choice((1, 2))
            ctx = rng.context(n_type)
            w = rng.generalized(n_type, 4, rng.r.randint(-n_type, 2))
            assert gderiv(gderiv(w, ctx), ctx).is_zero()

    def test_leibniz_over_wedge(self, rng):
        for _ in range(30):
            n_type = rng.r.choice((1, 2))
            ctx = rng.context(n_type)
            p = rng.r.randint(0, 2)
            w1 = rng.generalized(n_type, 4, p)
            w2 = rng.generalized(n_type, 4, rng.r.randint(0, 2))
            s = -1 if p % 2 else 1
            lhs = gderiv(gwedge(w1, w2), ctx)
            rhs = gwedge(gderiv(w1, ctx), w2) + gwedge(w1, gderiv(w2, ctx)).scale(s)
            assert (lhs - rhs).is_zero()

    def test_lie3_connection_derivative(self, rng, beta_chain):
        # (k1, k2) = (0, -1) on A + B xi1 + B xi2 + C xi1 xi2 gives
        # dA - alpha(B) + (dB - beta(C)) xi1 + dB xi2 + dC xi1 xi2
        tcm = beta_chain.tcm
        from gaugeforms.algebra import apply_beta, apply_linear
        A = rng.avf(tcm.g, 4, 1)
        B = rng.avf(tcm.h, 4, 2)
        C = rng.avf(tcm.l, 4, 3)
        w = GeneralizedForm.lie3(tcm, 1, A, B, B, C)
        out = gderiv(w, CTX_CONNECTION_2)
        alphaB = apply_linear(tcm.alpha, B, tcm.g)
        assert (out.slots[0] - (A.d() - alphaB)).is_zero()
        assert (out.slots[1] - (B.d() - apply_beta(tcm, C))).is_zero()
        assert (out.slots[2] - B.d()).is_zero()
        assert (out.slots[3] - C.d()).is_zero()

    def test_lie_profiles_nilpotent(self, rng, adjoint_sl2, symplectic3, peiffer_pair):
        for _ in range(20):
            ctx = rng.context(1)
            w = rng.generalized_lie2(adjoint_sl2.cm, 3, rng.r.randint(0, 2))
            assert gderiv(gderiv(w, ctx), ctx).is_zero()
        for m in (symplectic3, peiffer_pair):
            for _ in range(10):
                ctx = rng.context(2)
                w = rng.generalized_lie3(m.tcm, 3, rng.r.randint(0, 2))
                assert gderiv(gderiv(w, ctx), ctx).is_zero()


class TestGradedBracket:
    def test_zero(self, rng, adjoint_sl2):
        cm = adjoint_sl2.cm
        z = GeneralizedForm.lie2(cm, 1, AlgebraValuedForm(cm.g, 3, 1),
                                 AlgebraValuedForm(cm.h, 3, 2))
        assert gbracket(z, z).is_zero()

    def test_degree1_self_bracket(self, rng, adjoint_sl2):
        # xi-slot of [w, w] is 2 A |> B for degree-1 w
        from gaugeforms.algebra import act
        cm = adjoint_sl2.cm
        w = rng.generalized_lie2(cm, 4, 1)
        out = gbracket(w, w)
        expected = act(cm, w.slots[0], w.slots[1]).scale(2)
        assert (out.slots[1] - expected).is_zero()

    @pytest.mark.parametrize("model_name,n_type", [
        ("adjoint_sl2", 1), ("skeletal_coadjoint", 1),
        ("symplectic3", 2), ("beta_chain", 2), ("peiffer_pair", 2)])
    def test_dgla_axioms(self, rng, model_name, n_type):
        from gaugeforms.models import builtin
        m = builtin(model_name)
        make = (lambda p: rng.generalized_lie2(m.cm, 3, p)) if n_type == 1 else \
            (lambda p: rng.generalized_lie3(m.tcm, 3, p))
        for _ in range(8):
            ctx = rng.context(n_type)
            p, q, r = (rng.r.randint(0, 2) for _ in range(3))
            w1, w2, w3 = make(p), make(q), make(r)
            s = -1 if (p * q) % 2 else 1
            assert (gbracket(w1, w2) + gbracket(w2, w1).scale(s)).is_zero()
            jac = (gbracket(w1, gbracket(w2, w3)) - gbracket(gbracket(w1, w2), w3)
                   - gbracket(w2, gbracket(w1, w3)).scale(s))
            assert jac.is_zero()
            sp = -1 if p % 2 else 1
            lei = (gderiv(gbracket(w1, w2), ctx) - gbracket(gderiv(w1, ctx), w2)
                   - gbracket(w1, gderiv(w2, ctx)).scale(sp))
            assert lei.is_zero()


class TestGradedPairing:
    def test_zero(self, rng, adjoint_sl2):
        cm = adjoint_sl2.cm
        w = rng.generalized_lie2(cm, 4, 1)
        z = GeneralizedForm.lie2(cm, 1, AlgebraValuedForm(cm.g, 4, 1),
                                 AlgebraValuedForm(cm.h, 4, 2))
        assert gpairing(w, z, adjoint_sl2.pairing).is_zero()

    def test_graded_symmetry_type1(self, rng, adjoint_sl2):
        for _ in range(20):
            p, q = rng.r.randint(0, 2), rng.r.randint(0, 2)
            w1 = rng.generalized_lie2(adjoint_sl2.cm, 4, p)
            w2 = rng.generalized_lie2(adjoint_sl2.cm, 4, q)
            s = -1 if (p * q) % 2 else 1
            lhs = gpairing(w1, w2, adjoint_sl2.pairing)
            rhs = gpairing(w2, w1, adjoint_sl2.pairing).scale(s)
            assert (lhs - rhs).is_zero()

    def test_graded_symmetry_type2_equal_even_degrees(self, rng, symplectic3):
        # the N=2 pairing is graded symmetric when k1 = (-1)^{pq+p+q} k2;
        # for equal even degrees that is k1 = k2
        for _ in range(10):
            k = rng.fraction()
            ctx = DerivativeContext(2, k1=k, k2=k)
            p = rng.r.choice((0, 2))
            w1 = rng.generalized_lie3(symplectic3.tcm, 4, p)
            w2 = rng.generalized_lie3(symplectic3.tcm, 4, p)
            lhs = gpairing(w1, w2, symplectic3.pairing, ctx)
            rhs = gpairing(w2, w1, symplectic3.pairing, ctx)
            assert (lhs - rhs).is_zero()

    def test_k1_zero_kills_first_cross_term(self, rng, symplectic3):
        # with k1 = 0 the V1/V2' term is absent: compare against k1 != 0
        tcm = symplectic3.tcm
        w1 = rng.generalized_lie3(tcm, 4, 1)
        w2 = rng.generalized_lie3(tcm, 4, 1)
        ctx0 = DerivativeContext(2, k1=Q(0), k2=Q(-1))
        v1 = gpairing(w1, w2, symplectic3.pairing, ctx0)
        # recompute with the V' slots zeroed: k1 term cannot contribute
        z = AlgebraValuedForm(tcm.h, 4, 2)
        w1z = GeneralizedForm.lie3(tcm, 1, w1.slots[0], w1.slots[1], z, w1.slots[3])
        w2z = GeneralizedForm.lie3(tcm, 1, w2.slots[0], w2.slots[1], z, w2.slots[3])
        # difference only through the k2 <V1', V2> term, whose total
        # coefficient is -k2 (-1)^{pq} = -1 here
        from gaugeforms.algebra import pair_forms
        diff = v1 - gpairing(w1z, w2z, symplectic3.pairing, ctx0)
        expected = pair_forms(symplectic3.pairing.pairing_h_anti,
                              w1.slots[2], w2.slots[1]).scale(Q(-1))
        assert (diff - expected).is_zero()


class TestGeneralizedInner:
    def test_real_recurrence(self, rng):
        # ((w1, w2)) = ((U1, U2)) + ((V1, V2)) for type N=1
        for _ in range(10):
            p = rng.r.randint(0, 2)
            w1 = rng.generalized(1, 3, p)
            w2 = rng.generalized(1, 3, p)
            lhs = ginner(w1, w2)
            rhs = w1.slots[0].inner(w2.slots[0]) + w1.slots[1].inner(w2.slots[1])
            assert lhs == rhs

    def test_unit_example(self, adjoint_sl2):
        # w = dx1 (x) X_0 with V = 0 on the unit square: ((w, w)) = 1
        w = GeneralizedForm.lie2(
            adjoint_sl2.cm, 1,
            AlgebraValuedForm.single(adjoint_sl2.cm.g, 0, OrdinaryForm.dx(2, 1)),
            AlgebraValuedForm(adjoint_sl2.cm.h, 2, 2))
        assert ginner(w, w, adjoint_sl2.pairing) == 1

    def test_symmetry_and_positivity(self, rng, symplectic3):
        for _ in range(8):
            p = rng.r.randint(0, 2)
            w1 = rng.generalized_lie3(symplectic3.tcm, 3, p)
            w2 = rng.generalized_lie3(symplectic3.tcm, 3, p)
            assert ginner(w1, w2, symplectic3.pairing) == ginner(w2, w1, symplectic3.pairing)
            if not w1.is_zero():
                assert ginner(w1, w1, symplectic3.pairing) > 0

    def test_recurrence_against_slotwise(self, rng, adjoint_sl2):
        from gaugeforms.algebra import inner_sym
        for _ in range(8):
            p = rng.r.randint(0, 2)
            w1 = rng.generalized_lie2(adjoint_sl2.cm, 3, p)
            w2 = rng.generalized_lie2(adjoint_sl2.cm, 3, p)
            lhs = ginner(w1, w2, adjoint_sl2.pairing)
            rhs = inner_sym(adjoint_sl2.pairing.sym_g, w1.slots[0], w2.slots[0]) + \
                inner_sym(adjoint_sl2.pairing.sym_h, w1.slots[1], w2.slots[1])
            assert lhs == rhs
