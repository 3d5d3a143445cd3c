"""Tests for linearized polynomial arithmetic."""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

import numpy as np
import pytest

from engine.errors import BasisMismatchError, DependentPointsError, ZeroDivisorError
from engine.instrumentation import CountingPolyField
from engine.linearized import (
    annihilator_poly,
    frobenius_power,
    interpolation_poly,
    q_transform,
    qp_add,
    qp_compose,
    qp_eval,
    qp_eval_many,
    qp_frobenius,
    qp_identity,
    qp_left_divide,
    qp_monomial,
    qp_scale,
    qp_zero,
)
from models.linpoly import LinPoly


def make_poly(field, qdeg, seed=0, monic=False):
    rng = np.random.default_rng(seed)
    coeffs = [field.random_nonzero(rng) for _ in range(qdeg + 1)]
    if monic:
        coeffs[-1] = field.one
    return LinPoly(tuple(coeffs), field.name)


def make_points(field, count, seed=0):
    rng = np.random.default_rng(seed)
    return [field.random_nonzero(rng) for _ in range(count)]


class TestLinPoly:
    def test_trailing_zeros_trimmed(self):
        P = LinPoly((3, 0, 5, 0, 0))
        assert P.coeffs == (3, 0, 5)
        assert P.qdeg == 2

    def test_zero_polynomial(self, poly_field):
        Z = qp_zero(poly_field)
        assert Z.is_zero()
        assert Z.qdeg == -1
        assert Z.coeff(4) == 0

    def test_monomial(self, poly_field):
        assert qp_monomial(poly_field, 3, 7).coeffs == (0, 0, 0, 7)
        assert qp_identity(poly_field).coeffs == (1,)


class TestEval:
    def test_is_gf2_linear(self, poly_field):
        P = make_poly(poly_field, 6, seed=1)
        a, b = make_points(poly_field, 2, seed=2)
        assert qp_eval(poly_field, P, a ^ b) == qp_eval(poly_field, P, a) ^ qp_eval(poly_field, P, b)

    def test_monomial_is_frobenius(self, poly_field):
        a = make_points(poly_field, 1, seed=3)[0]
        assert qp_eval(poly_field, qp_monomial(poly_field, 5), a) == frobenius_power(poly_field, a, 5)

    def test_many(self, poly_field):
        P = make_poly(poly_field, 2, seed=4)
        xs = make_points(poly_field, 3, seed=5)
        assert qp_eval_many(poly_field, P, xs) == [qp_eval(poly_field, P, x) for x in xs]

    def test_negative_frobenius_power(self, poly_field):
        a = make_points(poly_field, 1, seed=6)[0]
        assert frobenius_power(poly_field, frobenius_power(poly_field, a, -3), 3) == a


class TestAlgebra:
    def test_add_cancels(self, poly_field):
        P = make_poly(poly_field, 4, seed=7)
        assert qp_add(poly_field, P, P).is_zero()

    def test_add_basis_mismatch(self, poly_field):
        with pytest.raises(BasisMismatchError):
            qp_add(poly_field, LinPoly((1,), "poly"), LinPoly((1,), "normal"))

    def test_scale(self, poly_field):
        P = make_poly(poly_field, 3, seed=8)
        c, x = make_points(poly_field, 2, seed=9)
        assert qp_eval(poly_field, qp_scale(poly_field, c, P), x) == poly_field.mul(c, qp_eval(poly_field, P, x))
        assert qp_scale(poly_field, 0, P).is_zero()

    def test_frobenius(self, poly_field):
        P = make_poly(poly_field, 3, seed=10)
        x = make_points(poly_field, 1, seed=11)[0]
        assert qp_eval(poly_field, qp_frobenius(poly_field, P), x) == poly_field.square(qp_eval(poly_field, P, x))

    def test_compose_evaluates_as_composition(self, poly_field):
        A = make_poly(poly_field, 4, seed=12)
        B = make_poly(poly_field, 3, seed=13)
        x = make_points(poly_field, 1, seed=14)[0]
        AB = qp_compose(poly_field, A, B)
        assert AB.qdeg == 7
        assert qp_eval(poly_field, AB, x) == qp_eval(poly_field, A, qp_eval(poly_field, B, x))

    def test_compose_is_not_commutative(self, poly_field):
        A = make_poly(poly_field, 2, seed=15)
        B = make_poly(poly_field, 2, seed=16)
        assert qp_compose(poly_field, A, B) != qp_compose(poly_field, B, A)

    def test_compose_with_zero(self, poly_field):
        assert qp_compose(poly_field, make_poly(poly_field, 2), qp_zero(poly_field)).is_zero()


class TestLeftDivide:
    def test_reconstructs_dividend(self, poly_field):
        N = make_poly(poly_field, 9, seed=17)
        D = make_poly(poly_field, 4, seed=18)
        Q, R = qp_left_divide(poly_field, N, D)
        assert Q.qdeg == 5
        assert R.qdeg < D.qdeg
        assert qp_add(poly_field, qp_compose(poly_field, D, Q), R) == N

    def test_exact_division(self, poly_field):
        D = make_poly(poly_field, 3, seed=19)
        Q = make_poly(poly_field, 4, seed=20)
        got, R = qp_left_divide(poly_field, qp_compose(poly_field, D, Q), D)
        assert got == Q
        assert R.is_zero()

    def test_quotient_only_mode(self, poly_field):
        N = make_poly(poly_field, 8, seed=21)
        D = make_poly(poly_field, 5, seed=22)
        full, _ = qp_left_divide(poly_field, N, D)
        partial, R = qp_left_divide(poly_field, N, D, wanted=3)
        assert partial == full
        assert R is None

    def test_multiplication_budget(self, poly_field):
        N = make_poly(poly_field, 5, seed=40)
        D = make_poly(poly_field, 2, seed=41)
        full, partial = CountingPolyField(), CountingPolyField()
        qp_left_divide(full, N, D)
        qp_left_divide(partial, N, D, wanted=3)
        # 4 quotient coefficients, each one scaling product plus deg_q D subtraction products
        assert full.counts["multiply"] == 4 * (1 + 2)
        # subtraction products landing below q-degree 2 are skipped: 2 + 2 + 1 + 0
        assert partial.counts["multiply"] == 4 + 5
        assert full.counts["invert"] == partial.counts["invert"] == 1

    def test_constant_divisor(self, poly_field):
        N = make_poly(poly_field, 3, seed=42)
        D = make_poly(poly_field, 0, seed=43)
        Q, R = qp_left_divide(poly_field, N, D)
        assert qp_compose(poly_field, D, Q) == N
        assert R.is_zero()

    def test_low_degree_dividend(self, poly_field):
        N = make_poly(poly_field, 1, seed=23)
        Q, R = qp_left_divide(poly_field, N, make_poly(poly_field, 3, seed=24))
        assert Q.is_zero()
        assert R == N

    def test_zero_divisor(self, poly_field):
        with pytest.raises(ZeroDivisorError):
            qp_left_divide(poly_field, make_poly(poly_field, 2), qp_zero(poly_field))


class TestSubspacePolynomials:
    def test_single_point(self, poly_field):
        g = make_points(poly_field, 1, seed=25)[0]
        assert annihilator_poly(poly_field, [g]).coeffs == (g, 1)

    def test_vanishes_on_span(self, poly_field):
        points = make_points(poly_field, 6, seed=26)
        A = annihilator_poly(poly_field, points)
        assert A.qdeg == 6
        assert A.coeffs[-1] == poly_field.one
        for g in points:
            assert qp_eval(poly_field, A, g) == 0
        assert qp_eval(poly_field, A, points[0] ^ points[3] ^ points[5]) == 0

    def test_dependent_points(self, poly_field):
        a, b = make_points(poly_field, 2, seed=27)
        with pytest.raises(DependentPointsError):
            annihilator_poly(poly_field, [a, b, a ^ b])

    def test_interpolation(self, poly_field):
        points = make_points(poly_field, 7, seed=28)
        values = make_points(poly_field, 7, seed=29)
        I = interpolation_poly(poly_field, points, values)
        assert I.qdeg < 7
        assert qp_eval_many(poly_field, I, points) == values

    def test_interpolation_length_mismatch(self, poly_field):
        with pytest.raises(ValueError):
            interpolation_poly(poly_field, [1, 2], [1])

    def test_works_in_normal_basis(self, normal_field):
        points = make_points(normal_field, 3, seed=30)
        A = annihilator_poly(normal_field, points)
        assert A.basis == "normal"
        assert all(qp_eval(normal_field, A, g) == 0 for g in points)


class TestQTransform:
    def test_involution(self, normal_field):
        vec = make_points(normal_field, 5, seed=31)
        twice = q_transform(normal_field, q_transform(normal_field, vec))
        assert twice == vec + [0] * 122

    def test_row_subset(self, normal_field):
        vec = make_points(normal_field, 4, seed=32)
        full = q_transform(normal_field, vec)
        assert q_transform(normal_field, vec, rows=range(3)) == full[:3]

    def test_unit_entry(self, normal_field):
        # (1, 0, ...) maps to (α^[0], α^[1], ...)
        out = q_transform(normal_field, [normal_field.one], rows=range(4))
        assert out == [1 << i for i in range(4)]

    def test_too_long(self, normal_field):
        with pytest.raises(ValueError):
            q_transform(normal_field, [1] * 128)
