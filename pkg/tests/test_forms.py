"""Exterior calculus: wedge, derivative, Hodge star, integration, inner product."""

from fractions import Fraction as Q

import pytest

from gaugeforms.poly import Polynomial
from gaugeforms.forms import OrdinaryForm, linear_combine
from gaugeforms.rand import Rand

from oracles import ext_d_oracle, hodge_oracle, integrate_monomial_oracle, wedge_oracle


def x(dim, i):
    return OrdinaryForm.from_poly(Polynomial.variable(dim, i))


def dx(dim, *idx):
    return OrdinaryForm.dx(dim, *idx)


class TestWedge:
    def test_self_wedge_vanishes(self):
        a = dx(2, 1)
        assert a.wedge(a).is_zero()

    def test_single_term(self):
        lhs = x(2, 1).wedge(dx(2, 1)).wedge(dx(2, 2))
        rhs = x(2, 1).wedge(dx(2, 1, 2))
        assert lhs == rhs

    def test_disjoint_blocks_commute(self):
        a = dx(4, 1, 2)
        b = dx(4, 3, 4)
        assert a.wedge(b) == b.wedge(a)
        assert a.wedge(b) == wedge_oracle(a, b)

    def test_against_sign_oracle(self, rng):
        for _ in range(60):
            n = rng.r.randint(2, 5)
            a = rng.form(n, rng.r.randint(0, 3))
            b = rng.form(n, rng.r.randint(0, 3))
            assert a.wedge(b) == wedge_oracle(a, b)

    def test_graded_commutativity(self, rng):
        for _ in range(60):
            n = rng.r.randint(2, 5)
            p, q = rng.r.randint(0, 3), rng.r.randint(0, 3)
            a, b = rng.form(n, p), rng.form(n, q)
            s = -1 if (p * q) % 2 else 1
            assert (a.wedge(b) - b.wedge(a).scale(s)).is_zero()

    def test_associative_bilinear(self, rng):
        for _ in range(30):
            n = 4
            a, b, c = (rng.form(n, rng.r.randint(0, 2)) for _ in range(3))
            assert a.wedge(b).wedge(c) == a.wedge(b.wedge(c))
            d = rng.form(n, b.degree)
            assert a.wedge(b + d) == a.wedge(b) + a.wedge(d)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            dx(2, 1).wedge(dx(3, 1))

    def test_degree_clamping(self):
        a = dx(2, 1, 2)
        assert a.wedge(dx(2, 1)).is_zero()
        assert OrdinaryForm(3, -1).is_zero()
        assert OrdinaryForm(3, 4).is_zero()


class TestExteriorDerivative:
    def test_d_of_coordinate(self):
        assert x(2, 1).d() == dx(2, 1)

    def test_partial_derivative_oracle(self):
        # d(x1 x2 dx1) = x1 dx2 ^ dx1 = -x1 dx1 ^ dx2
        f = Polynomial.variable(2, 1) * Polynomial.variable(2, 2)
        a = OrdinaryForm(2, 1, {(1,): f})
        expected = x(2, 1).wedge(dx(2, 1, 2)).scale(-1)
        assert a.d() == expected
        assert a.d() == ext_d_oracle(a)

    def test_oracle_random(self, rng):
        for _ in range(40):
            n = rng.r.randint(2, 5)
            a = rng.form(n, rng.r.randint(0, 3))
            assert a.d() == ext_d_oracle(a)

    def test_nilpotency(self, rng):
        for _ in range(60):
            n = rng.r.randint(2, 5)
            a = rng.form(n, rng.r.randint(0, 3), max_degree=3)
            assert a.d().d().is_zero()

    def test_leibniz(self, rng):
        for _ in range(40):
            n = rng.r.randint(2, 5)
            p = rng.r.randint(0, 2)
            a, b = rng.form(n, p), rng.form(n, rng.r.randint(0, 2))
            s = -1 if p % 2 else 1
            lhs = a.wedge(b).d()
            rhs = a.d().wedge(b) + a.wedge(b.d()).scale(s)
            assert (lhs - rhs).is_zero()

    def test_top_degree(self):
        assert dx(2, 1, 2).d().is_zero()


class TestLinearCombine:
    def test_cancellation(self, rng):
        a = rng.form(3, 2)
        assert linear_combine([1, -1], [a, a]).is_zero()

    def test_sum(self):
        a = dx(2, 1)
        assert linear_combine([2, 3], [a, a]) == a.scale(5)
        b = x(2, 1).wedge(dx(2, 2))
        assert linear_combine(["1/2", "1/2"], [b, b]) == b

    def test_mismatch(self):
        with pytest.raises(ValueError):
            linear_combine([1, 1], [dx(2, 1), dx(2, 1, 2)])


class TestHodge:
    def test_euclidean_plane(self):
        assert dx(2, 1).hodge() == dx(2, 2)
        assert dx(2, 2).hodge() == dx(2, 1).scale(-1)
        assert dx(2, 1).hodge().hodge() == dx(2, 1).scale(-1)

    def test_dim4_block(self):
        assert dx(4, 1, 2).hodge() == dx(4, 3, 4)
        assert dx(4, 1, 3).hodge() == dx(4, 2, 4).scale(-1)

    def test_oracle_random(self, rng):
        for _ in range(40):
            n = rng.r.randint(2, 5)
            a = rng.form(n, rng.r.randint(0, n))
            assert a.hodge() == hodge_oracle(a)

    def test_involution(self, rng):
        for _ in range(40):
            n = rng.r.randint(2, 5)
            p = rng.r.randint(0, n)
            a = rng.form(n, p)
            s = -1 if (p * (n - p)) % 2 else 1
            assert a.hodge().hodge() == a.scale(s)


class TestIntegration:
    def test_unit_volume(self):
        assert dx(2, 1, 2).integrate_cube() == 1

    def test_monomial(self):
        w = x(2, 1).wedge(dx(2, 1, 2))
        assert w.integrate_cube() == Q(1, 2)
        assert integrate_monomial_oracle(w.comps[(1, 2)]) == Q(1, 2)

    def test_zero(self):
        assert OrdinaryForm(3, 3).integrate_cube() == 0

    def test_degree_error(self):
        with pytest.raises(ValueError):
            dx(3, 1).integrate_cube()

    def test_oracle_random(self, rng):
        for _ in range(30):
            n = rng.r.randint(1, 4)
            a = rng.form(n, n, max_degree=3)
            expected = sum(
                (integrate_monomial_oracle(p) for p in a.comps.values()), Q(0))
            assert a.integrate_cube() == expected


class TestInner:
    def test_orthonormal_basis(self):
        assert dx(2, 1).inner(dx(2, 1)) == 1
        assert dx(2, 1).inner(dx(2, 2)) == 0

    def test_monomial_value(self):
        a = x(2, 1).wedge(dx(2, 1))
        assert a.inner(a) == Q(1, 3)

    def test_symmetric_positive(self, rng):
        for _ in range(40):
            n = rng.r.randint(2, 4)
            p = rng.r.randint(0, n)
            a, b = rng.form(n, p), rng.form(n, p)
            assert a.inner(b) == b.inner(a)
            if not a.is_zero():
                assert a.inner(a) > 0

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            dx(2, 1).inner(dx(2, 1, 2))


class TestSerializationShape:
    def test_roundtrip(self, rng):
        from gaugeforms.serialize import form_from_obj, form_to_obj
        import json
        for _ in range(20):
            a = rng.form(4, rng.r.randint(0, 3), max_degree=3)
            obj = form_to_obj(a)
            b = form_from_obj(json.loads(json.dumps(obj)))
            assert a == b
            assert json.dumps(form_to_obj(b), sort_keys=True) == \
                json.dumps(obj, sort_keys=True)
