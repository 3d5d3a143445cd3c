"""Tests for the command-line harness."""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

import json

import pytest

import cli
from cli import main
from config.defaults import OP_KINDS
from data import ctx_store
from engine.errors import BasisMismatchError, DependentPointsError


class TestComplexityCommand:
    def test_markdown_tables(self, capsys):
        assert main(["complexity", "--c-m", "501"]) == 0
        out = capsys.readouterr().out
        assert "### wba" in out
        assert "| Step | Additions | Multiplications |" in out
        assert "418319014" in out

    def test_json(self, capsys):
        assert main(["complexity", "--c-m", "501", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["meta"]["tau"] == 55
        assert payload["tdd"][-1]["Additions"] == 458_322_284

    def test_csv_to_file(self, tmp_path):
        out = tmp_path / "complexity.csv"
        assert main(["complexity", "--c-m", "501", "--format", "csv", "--out", str(out)]) == 0
        text = out.read_text(encoding="utf-8")
        assert text.startswith("# wba")
        assert "Step,Additions,Multiplications" in text


class TestArgumentErrors:
    def test_n_above_m(self):
        assert main(["complexity", "--n", "200"]) == 2

    def test_unknown_command(self):
        assert main(["decode-all"]) == 2

    def test_bad_seed(self):
        assert main(["roundtrip", "--seed", "-1"]) == 2

    def test_missing_decoder(self):
        assert main(["count-ops"]) == 2

    def test_field_bench_too_few_calls(self):
        assert main(["bench-field", "--basis", "poly", "--calls", "5"]) == 2


class TestDecodingCommands:
    def test_roundtrip_summary(self, capsys):
        assert main(["roundtrip", "--n", "12", "--k", "4", "--trials", "3", "--seed", "7"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert "WBA: 3/3 OK" in lines
        assert "TDD: 3/3 OK" in lines

    def test_roundtrip_beyond_radius_fails(self):
        assert main(["roundtrip", "--n", "12", "--k", "4", "--tau", "6", "--trials", "2"]) == 1

    def test_count_ops_json_keys(self, capsys):
        assert main(["count-ops", "--decoder", "wba", "--n", "8", "--k", "2",
                     "--trials", "1", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert set(payload) == set(OP_KINDS) | {"trials", "seed"}
        assert payload["trials"] == 1

    def test_bench_decoders(self, capsys):
        assert main(["bench-decoders", "--n", "12", "--k", "4", "--trials", "10", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert [row["Decoder"] for row in payload["decoding time"]] == ["WBA", "TDD"]

    def test_basis_info(self, capsys):
        assert main(["basis-info", "--format", "json"]) == 0
        info = json.loads(capsys.readouterr().out)
        assert info["complexity"] == 501
        assert info["self_dual"] is True

    @pytest.mark.slow
    def test_full_size_roundtrip(self, capsys):
        assert main(["roundtrip", "--trials", "100", "--tau", "55", "--seed", "7"]) == 0
        out = capsys.readouterr().out
        assert "WBA: 100/100 OK" in out
        assert "TDD: 100/100 OK" in out


class TestBasisFile:
    def test_write_ctx(self, ctx, tmp_path, monkeypatch, capsys):
        path = tmp_path / "normal_basis_127.ctx"
        monkeypatch.setattr(ctx_store, "default_ctx_path", lambda: path)
        assert main(["basis-info", "--write-ctx", "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out)["complexity"] == ctx.complexity
        assert ctx_store.load_ctx(path).entries == ctx.entries

    def test_basis_info_writes_nothing_by_default(self, ctx, tmp_path, monkeypatch):
        path = tmp_path / "normal_basis_127.ctx"
        monkeypatch.setattr(ctx_store, "default_ctx_path", lambda: path)
        assert main(["basis-info"]) == 0
        assert not path.exists()


class TestEngineErrors:
    @pytest.mark.parametrize("error", [DependentPointsError(3), BasisMismatchError("poly", "normal")])
    def test_engine_errors_exit_one(self, error, monkeypatch):
        def fail(args):
            raise error

        monkeypatch.setitem(cli.COMMANDS, "basis-info", fail)
        assert main(["basis-info"]) == 1

    def test_parameter_errors_exit_two(self, monkeypatch):
        def fail(args):
            raise ValueError("calls must be at least 10000")

        monkeypatch.setitem(cli.COMMANDS, "basis-info", fail)
        assert main(["basis-info"]) == 2
