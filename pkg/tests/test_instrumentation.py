"""Tests for the counting field backends."""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from engine.gf_poly import PolyBasisField
from engine.instrumentation import CountingNormalField, CountingPolyField
from engine.linearized import qp_eval
from models.linpoly import LinPoly


class TestCountingPolyField:
    def test_counts_primitives(self):
        field = CountingPolyField()
        field.add(3, 5)
        field.mul(3, 5)
        field.mul(7, 9)
        field.square(3)
        assert field.snapshot() == {"add": 1, "multiply": 2, "square": 1}

    def test_results_unchanged(self):
        field, plain = CountingPolyField(), PolyBasisField()
        assert field.mul(0x1234, 0xABCD) == plain.mul(0x1234, 0xABCD)
        assert field.inv(0x1234) == plain.inv(0x1234)

    def test_qpow_counts_squarings(self):
        field = CountingPolyField()
        field.qpow(12345, 4)
        assert field.snapshot() == {"square": 4}

    def test_inversion_counted_once(self):
        field = CountingPolyField()
        field.inv(0x77)
        assert field.snapshot() == {"invert": 1}
        # Euclidean inversion runs outside the primitive interface
        assert not field.nested

    def test_reset(self):
        field = CountingPolyField()
        field.add(1, 2)
        field.reset()
        assert field.snapshot() == {}

    def test_evaluation_budget(self):
        field = CountingPolyField()
        P = LinPoly((3, 5, 7), "poly")
        qp_eval(field, P, 11)
        assert field.snapshot() == {"square": 2, "multiply": 3, "add": 3}


class TestCountingNormalField:
    def test_generic_product_counts_tables(self, ctx):
        field = CountingNormalField(ctx)
        field.mul(3, 5)
        assert field.snapshot() == {"set_shift_table": 2, "multiply_shift_tables": 1}

    def test_rotation_counts_as_q_power(self, ctx):
        field = CountingNormalField(ctx)
        table = field.make_shift_table(9)
        field.rotate_table(table, 3)
        field.qpow(9, 2)
        field.square(9)
        assert field.snapshot() == {"set_shift_table": 1, "q_power": 2, "square": 1}

    def test_mul_alpha_pow(self, ctx):
        field = CountingNormalField(ctx)
        field.mul_alpha_pow(9, 4)
        assert field.snapshot() == {"mul_alpha_pow": 1}

    def test_scale_vector_shares_the_scalar_table(self, ctx):
        field = CountingNormalField(ctx)
        field.scale_vector(7, [1, 0, 2])
        assert field.snapshot() == {"set_shift_table": 3, "multiply_shift_tables": 2}
