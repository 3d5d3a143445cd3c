"""Tests for Gabidulin code construction, encoding and decoder precomputation."""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

import numpy as np
import pytest

from engine import gf2_linalg
from engine.errors import InternalConsistencyError
from engine.gabidulin import (
    POLY,
    check_parity,
    dual_support,
    encode,
    field_inverse,
    gen_code,
    kernel_vector,
    moore_matrix,
    rank_of,
    sample_error,
    tdd_precompute,
)
from models.code import GabidulinCode


def make_msg(k, seed=0):
    rng = np.random.default_rng(seed)
    return [POLY.random(rng) for _ in range(k)]


def all_zero(rows):
    return all(x == 0 for row in rows for x in row)


def syndromes(code, word):
    """Σ_j h_j^[a] · word_j for a = 0..n-k-1."""
    H = moore_matrix(POLY, code.h, code.n - code.k)
    out = []
    for row in H:
        acc = 0
        for h, c in zip(row, word):
            acc ^= POLY.mul(h, c)
        out.append(acc)
    return out


class TestCodeParameters:
    def test_security_level_one(self):
        code = GabidulinCode(n=113, k=3, g=())
        assert code.d == 111
        assert code.tau_max == 55

    def test_tiny_code(self):
        code = gen_code(4, 2, seed=1)
        assert code.tau_max == 1
        assert len(code.h) == 4

    def test_rejects_n_above_m(self):
        with pytest.raises(ValueError, match="exceeds"):
            gen_code(128, 3)

    def test_rejects_k_not_below_n(self):
        with pytest.raises(ValueError):
            gen_code(5, 5)

    def test_seeded_generation_is_reproducible(self):
        assert gen_code(8, 3, seed=4).g == gen_code(8, 3, seed=4).g


class TestSupport:
    def test_generators_independent(self, small_code):
        assert rank_of(small_code.g) == small_code.n
        assert rank_of(small_code.h) == small_code.n

    def test_parity_check(self, small_code):
        entries = check_parity(small_code)
        assert len(entries) == small_code.n - small_code.k
        assert len(entries[0]) == small_code.k
        assert all_zero(entries)

    @pytest.mark.parametrize("solver", ["direct", "dual-basis"])
    def test_both_solvers(self, small_code, solver):
        code = GabidulinCode(n=small_code.n, k=small_code.k, g=small_code.g)
        dual_support(code, solver)
        assert all_zero(check_parity(code))

    def test_unknown_solver(self, small_code):
        code = GabidulinCode(n=small_code.n, k=small_code.k, g=small_code.g)
        with pytest.raises(ValueError):
            dual_support(code, "magic")

    def test_parity_without_dual_support(self, small_code):
        with pytest.raises(ValueError):
            check_parity(GabidulinCode(n=small_code.n, k=small_code.k, g=small_code.g))

    @pytest.mark.slow
    def test_full_size_code(self):
        code = gen_code(113, 3, seed=1)
        assert all_zero(check_parity(code))


class TestEncode:
    def test_codeword_has_zero_syndromes(self, small_code):
        c = encode(small_code, make_msg(small_code.k, seed=2))
        assert all(s == 0 for s in syndromes(small_code, c))

    def test_linear(self, small_code):
        a = make_msg(small_code.k, seed=3)
        b = make_msg(small_code.k, seed=4)
        ca, cb = encode(small_code, a), encode(small_code, b)
        csum = encode(small_code, [x ^ y for x, y in zip(a, b)])
        assert csum == [x ^ y for x, y in zip(ca, cb)]

    def test_constant_message(self, small_code):
        assert encode(small_code, [1] + [0] * (small_code.k - 1)) == list(small_code.g)

    def test_wrong_length(self, small_code):
        with pytest.raises(ValueError):
            encode(small_code, [1])


class TestSampleError:
    @pytest.mark.parametrize("tau", [1, 3, 4])
    def test_exact_rank(self, tau):
        e = sample_error(12, tau, seed=tau)
        assert len(e) == 12
        assert rank_of(e) == tau

    def test_zero_rank(self):
        assert sample_error(7, 0, seed=1) == [0] * 7

    def test_rank_out_of_range(self):
        with pytest.raises(ValueError):
            sample_error(5, 6)


class TestMatrices:
    def test_moore_rows(self):
        points = make_msg(3, seed=5)
        rows = moore_matrix(POLY, points, 3, start=2)
        assert rows[0] == [POLY.qpow(p, 2) for p in points]
        assert rows[2] == [POLY.qpow(p, 4) for p in points]

    def test_kernel_vector(self):
        points = make_msg(5, seed=6)
        matrix = moore_matrix(POLY, points, 4)
        x = kernel_vector(POLY, matrix, 5)
        assert any(x)
        for row in matrix:
            acc = 0
            for a, b in zip(row, x):
                acc ^= POLY.mul(a, b)
            assert acc == 0

    def test_kernel_of_full_rank_system(self):
        points = make_msg(3, seed=7)
        with pytest.raises(InternalConsistencyError):
            kernel_vector(POLY, moore_matrix(POLY, points, 3), 3)

    def test_field_inverse(self):
        matrix = moore_matrix(POLY, make_msg(3, seed=8), 3)
        inv = field_inverse(POLY, matrix)
        for i in range(3):
            for j in range(3):
                acc = 0
                for t in range(3):
                    acc ^= POLY.mul(matrix[i][t], inv[t][j])
                assert acc == (1 if i == j else 0)


class TestTddPrecompute:
    def test_left_inverse(self, small_code, ctx):
        pre = tdd_precompute(small_code, ctx)
        assert pre.A.shape == (127, small_code.n)
        assert (gf2_linalg.matmul(pre.Adag, pre.A) == np.eye(small_code.n, dtype=np.uint8)).all()

    def test_columns_are_normal_coordinates(self, small_code, ctx, normal_field):
        pre = tdd_precompute(small_code, ctx)
        assert gf2_linalg.bits_to_int(pre.A[:, 2]) == normal_field.from_poly(small_code.h[2])

    def test_inverse_moore_submatrix(self, small_code, ctx, normal_field):
        pre = tdd_precompute(small_code, ctx)
        g_sub = [normal_field.from_poly(g) for g in small_code.g[:small_code.k]]
        gsub = moore_matrix(normal_field, g_sub, small_code.k)
        for i in range(small_code.k):
            for j in range(small_code.k):
                acc = 0
                for t in range(small_code.k):
                    acc ^= normal_field.mul(gsub[i][t], pre.gsub_inv[t][j])
                assert acc == (normal_field.one if i == j else 0)

    def test_cached_per_basis(self, small_code, ctx):
        assert tdd_precompute(small_code, ctx) is tdd_precompute(small_code, ctx)

    def test_row_supports(self, small_code, ctx):
        pre = tdd_precompute(small_code, ctx)
        assert len(pre.a_rows) == 127
        assert len(pre.adag_rows) == small_code.n
