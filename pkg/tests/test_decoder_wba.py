"""Tests for the Welch-Berlekamp interpolation decoder."""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

import pytest

from data.sample_data import make_instance
from engine.decoder_wba import _masked_pivot, wba_decode, wba_finalize, wba_init, wba_interpolate
from engine.errors import DecodeFailure
from engine.gf_poly import PolyBasisField
from engine.instrumentation import CountingPolyField
from engine.linearized import qp_eval


MODES = ["constant-time", "early-exit"]


class TestWbaInit:
    def test_discrepancies(self, small_code):
        inst = make_instance(small_code, seed=1)
        state = wba_init(small_code, inst.received)
        k = small_code.k
        assert state.l == k
        assert all(u == 0 for u in state.u0[:k])
        assert all(u != 0 for u in state.u0[k:])
        assert state.annihilator.qdeg == k
        assert state.p0.coeffs == (1,) and state.q1.coeffs == (1,)
        assert state.p1.is_zero() and state.q0.is_zero()

    def test_interpolator_matches_first_positions(self, small_code):
        inst = make_instance(small_code, seed=2)
        state = wba_init(small_code, inst.received)
        for g, r in zip(small_code.g[:small_code.k], inst.received):
            assert qp_eval(PolyBasisField(), state.interpolator, g) == r

    def test_codeword_gives_zero_second_discrepancies(self, small_code):
        inst = make_instance(small_code, tau=0, seed=3)
        state = wba_init(small_code, inst.received)
        assert all(u == 0 for u in state.u1)

    def test_wrong_length(self, small_code):
        with pytest.raises(ValueError):
            wba_init(small_code, [0] * (small_code.n - 1))


class TestWbaDecode:
    @pytest.mark.parametrize("mode", MODES)
    @pytest.mark.parametrize("tau", [0, 1, 3, 4])
    def test_recovers_message(self, small_code, mode, tau):
        inst = make_instance(small_code, tau=tau, seed=10 + tau)
        assert wba_decode(small_code, inst.received, mode=mode, seed=5) == inst.msg

    @pytest.mark.parametrize("mode", MODES)
    def test_medium_code_at_radius(self, medium_code, mode):
        inst = make_instance(medium_code, seed=21)
        assert inst.tau == medium_code.tau_max
        assert wba_decode(medium_code, inst.received, mode=mode, seed=5) == inst.msg

    def test_unknown_mode(self, small_code):
        inst = make_instance(small_code, seed=4)
        with pytest.raises(ValueError):
            wba_decode(small_code, inst.received, mode="fast")

    def test_beyond_radius_is_not_silently_accepted(self, medium_code):
        inst = make_instance(medium_code, tau=medium_code.tau_max + 3, seed=22)
        try:
            msg = wba_decode(medium_code, inst.received, seed=5)
        except DecodeFailure:
            return
        assert msg != inst.msg


class TestInterpolationModes:
    def test_constant_time_runs_all_iterations(self, small_code):
        for tau in (0, 2, 4):
            inst = make_instance(small_code, tau=tau, seed=30 + tau)
            state = wba_interpolate(wba_init(small_code, inst.received), "constant-time", seed=1)
            assert state.iterations == small_code.n - small_code.k
            assert state.finished

    def test_early_exit_on_codeword(self, small_code):
        inst = make_instance(small_code, tau=0, seed=40)
        state = wba_interpolate(wba_init(small_code, inst.received), "early-exit")
        assert state.iterations == 0
        assert wba_finalize(state) == inst.msg

    def test_constant_time_latches_on_codeword(self, small_code):
        inst = make_instance(small_code, tau=0, seed=41)
        state = wba_interpolate(wba_init(small_code, inst.received), "constant-time", seed=2)
        assert state.latched is not None
        assert state.substitutions >= 1
        assert wba_finalize(state) == inst.msg

    def test_early_exit_stops_before_end_for_low_rank(self, medium_code):
        inst = make_instance(medium_code, tau=2, seed=42)
        state = wba_interpolate(wba_init(medium_code, inst.received), "early-exit")
        assert state.iterations < medium_code.n - medium_code.k
        assert wba_finalize(state) == inst.msg

    def test_seed_does_not_change_result(self, small_code):
        inst = make_instance(small_code, tau=1, seed=43)
        a = wba_decode(small_code, inst.received, seed=1)
        b = wba_decode(small_code, inst.received, seed=99)
        assert a == b == inst.msg


class TestWbaCounts:
    def test_inversions(self, small_code):
        inst = make_instance(small_code, seed=50)
        field = CountingPolyField()
        wba_decode(small_code, inst.received, field=field)
        n, k = small_code.n, small_code.k
        # one per iteration, one per interpolation point, one for the division
        assert field.counts["invert"] == (n - k) + k + 1

    def test_masked_scan_costs_four_adds_per_candidate(self, small_code):
        inst = make_instance(small_code, tau=0, seed=51)
        field = CountingPolyField()
        state = wba_init(small_code, inst.received, field)
        before = field.counts["add"]
        _masked_pivot(field, state, small_code.k)
        assert field.counts["add"] - before == 4 * (small_code.n - small_code.k - 1)
