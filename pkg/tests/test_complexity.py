"""Tests for the theoretical GF(2) operation counts."""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

import pytest

from engine.complexity import complexity_report, complexity_tdd, complexity_totals, complexity_wba
from models.reports import ComplexityParams


def make_params(**overrides):
    values = {"n": 113, "k": 3, "m": 127, "c_m": 501, "c_inv": 0}
    values.update(overrides)
    return ComplexityParams(**values)


def by_step(rows):
    return {r["step"]: (r["additions"], r["multiplications"]) for r in rows}


class TestWbaComplexity:
    def test_rows_at_security_level_one(self):
        rows = by_step(complexity_wba(make_params()))
        assert rows["Init A, I"] == (343_236, 338_709)
        assert rows["Init u"] == (12_543_850, 12_419_330)
        assert rows["Update u"] == (196_435_910, 193_386_710)
        assert rows["Update polynomials"] == (207_152_020, 204_031_850)
        assert rows["Left division"] == (1_843_490, 1_774_190)
        assert rows["Compute m"] == (508, 0)

    def test_totals(self):
        totals = complexity_totals(complexity_wba(make_params()))
        assert totals == {"additions": 418_319_014, "multiplications": 411_950_789}

    def test_inversion_cost_adds_linearly(self):
        base = complexity_totals(complexity_wba(make_params()))
        costed = complexity_totals(complexity_wba(make_params(c_inv=100)))
        # 2k inversions in the init, 2 per iteration
        assert costed["additions"] - base["additions"] == 100 * (2 * 3 + 2 * 110)
        assert costed["multiplications"] == base["multiplications"]

    def test_values_are_integers(self):
        for row in complexity_wba(make_params(n=20, k=5)):
            assert float(row["additions"]).is_integer()


class TestTddComplexity:
    def test_rows_at_security_level_one(self):
        rows = by_step(complexity_tdd(make_params()))
        assert rows["Code transform"] == (1_806_448, 1_822_577)
        assert rows["Syndromes"] == (6_213_460, 0)
        assert rows["BMA"] == (381_443_865, 193_386_710)
        assert rows["Compute ẽ"] == (59_489_086, 15_080_615)
        assert rows["Inverse q-transform"] == (7_189_851, 0)
        assert rows["A† multiplication"] == (1_607_312, 1_621_663)
        assert rows["Compute m'"] == (572_262, 145_161)

    def test_totals(self):
        totals = complexity_totals(complexity_tdd(make_params()))
        assert totals == {"additions": 458_322_284, "multiplications": 212_056_726}

    def test_bma_inversion_term_is_halved(self):
        base = by_step(complexity_tdd(make_params()))["BMA"]
        costed = by_step(complexity_tdd(make_params(c_inv=100)))["BMA"]
        # additions m(d-1) · ½ C_inv (C_M - 1), multiplications m²(d-1) · ½ C_inv
        assert costed[0] - base[0] == 127 * 110 * 50 * 500
        assert costed[1] - base[1] == 127 * 127 * 110 * 50

    def test_no_errors_means_no_extension(self):
        rows = by_step(complexity_tdd(make_params(tau=0)))
        assert rows["Compute ẽ"] == (0, 0)

    def test_default_tau_is_radius(self):
        assert make_params().tau_eff == 55
        assert by_step(complexity_tdd(make_params(tau=55))) == by_step(complexity_tdd(make_params()))


class TestComplexityReport:
    def test_frames(self):
        tables = complexity_report(make_params())
        assert set(tables) == {"wba", "tdd", "summary"}
        wba = tables["wba"]
        assert list(wba.columns) == ["Step", "Additions", "Multiplications"]
        assert wba.iloc[-1]["Step"] == "Total"
        assert wba.iloc[-1]["Additions"] == 418_319_014

    def test_summary_within_tolerance(self):
        summary = complexity_report(make_params())["summary"]
        assert len(summary) == 4
        assert summary["Within tolerance"].all()

    def test_tdd_additions_deviation(self):
        summary = complexity_report(make_params())["summary"]
        row = summary[(summary["Decoder"] == "TDD") & (summary["Operation"] == "additions")].iloc[0]
        assert row["Deviation (%)"] == pytest.approx(3.93, abs=0.01)
