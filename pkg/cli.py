"""Command-line harness: timing, operation counts, complexity tables, round trips and basis info."""

import argparse
import json
import logging
import os
import sys
from typing import List, Optional

import pandas as pd

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from config.defaults import (
    BASES,
    DECODERS,
    DEFAULT_BENCH_CALLS,
    DEFAULT_K,
    DEFAULT_N,
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    DEFAULT_WBA_MODE,
    OUTPUT_FORMATS,
    WBA_MODES,
)
from data import ctx_store, report_io
from data.validator import validate_code_params, validate_tau
from engine import bench
from engine.basis_builder import basis_info, load_default_ctx
from engine.complexity import complexity_report
from engine.errors import CtxFileError, DecodeFailure, RankCodeError
from models.reports import ComplexityParams

logger = logging.getLogger(__name__)


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be a 64-bit unsigned integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=DEFAULT_OUTPUT_FORMAT)
    common.add_argument("--out", metavar="FILE", help="write the report to FILE (UTF-8) instead of stdout")
    common.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    common.add_argument("--verbose", "-v", action="store_true", help="debug logging")

    code = argparse.ArgumentParser(add_help=False)
    code.add_argument("--n", type=int, default=DEFAULT_N)
    code.add_argument("--k", type=int, default=DEFAULT_K)
    code.add_argument("--tau", type=int, default=None, help="error rank (default: tau_max)")

    parser = argparse.ArgumentParser(prog="rank-metric-bench", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bench-field", parents=[common], help="time the field primitives of one or both bases")
    p.add_argument("--basis", choices=BASES + ["both"], default="both")
    p.add_argument("--calls", type=int, default=DEFAULT_BENCH_CALLS)

    p = sub.add_parser("bench-decoders", parents=[common, code], help="time both decoders on identical inputs")
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--repetitions", type=int, default=1)

    p = sub.add_parser("count-ops", parents=[common, code], help="average primitive calls per decode")
    p.add_argument("--decoder", choices=DECODERS, required=True)
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--mode", choices=WBA_MODES, default=DEFAULT_WBA_MODE)

    p = sub.add_parser("complexity", parents=[common, code], help="theoretical GF(2) operation counts")
    p.add_argument("--c-m", type=int, default=None, help="multiplication table weight (default: the repository basis)")
    p.add_argument("--c-inv", type=int, default=0, help="modeled inversion cost in GF(2) additions")

    p = sub.add_parser("roundtrip", parents=[common, code], help="decode planted errors with both decoders")
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--mode", choices=WBA_MODES, default=DEFAULT_WBA_MODE)

    p = sub.add_parser("basis-info", parents=[common], help="summary of the normal basis in use")
    p.add_argument("--write-ctx", action="store_true", help="store the basis in data/normal_basis_127.ctx")
    return parser


def _check_code_args(parser: argparse.ArgumentParser, args: argparse.Namespace):
    result = validate_code_params(args.n, args.k)
    if result.is_valid:
        result = validate_tau(args.tau, args.n, args.k)
    if not result.is_valid:
        parser.error("; ".join(result.errors))
    for warning in result.warnings:
        logger.warning(warning)


def _cmd_bench_field(args) -> int:
    bases = BASES if args.basis == "both" else [args.basis]
    reports = [bench.bench_field(basis, args.calls, args.seed) for basis in bases]
    table = report_io.bench_field_frame(reports)
    meta = {"calls": args.calls, "seed": args.seed, **reports[0].environment}
    report_io.write_output(report_io.render_tables({"field operations": table}, args.format, meta), args.out)
    return 0


def _cmd_bench_decoders(args) -> int:
    report = bench.bench_decoders(
        args.trials, args.seed, args.n, args.k, args.tau, config={"repetitions": args.repetitions}
    )
    meta = {"trials": report.trials, "seed": report.seed, "tdd/wba": round(report.ratios["tdd/wba"], 2)}
    meta.update(report.environment)
    tables = {"decoding time": report_io.bench_decoders_frame(report)}
    report_io.write_output(report_io.render_tables(tables, args.format, meta), args.out)
    return 0


def _cmd_count_ops(args) -> int:
    report = bench.count_ops(args.decoder, args.trials, args.seed, args.n, args.k, args.tau, mode=args.mode)
    if args.format == "json":
        text = report_io.op_count_json(report)
    else:
        meta = {"decoder": args.decoder, "trials": report.trials, "seed": report.seed, "tau": report.tau}
        text = report_io.render_tables({"calls per decode": report_io.op_count_frame(report)}, args.format, meta)
    report_io.write_output(text, args.out)
    return 0


def _cmd_complexity(args) -> int:
    c_m = args.c_m if args.c_m is not None else load_default_ctx().complexity
    params = ComplexityParams(n=args.n, k=args.k, tau=args.tau, c_m=c_m, c_inv=args.c_inv)
    tables = complexity_report(params)
    meta = {"n": params.n, "k": params.k, "m": params.m, "tau": params.tau_eff, "C_M": c_m, "C_inv": params.c_inv}
    report_io.write_output(report_io.render_tables(tables, args.format, meta), args.out)
    return 0


def _cmd_roundtrip(args) -> int:
    report = bench.roundtrip(args.trials, args.tau, args.seed, args.n, args.k, args.mode)
    if args.format == "md":
        lines = [f"{decoder.upper()}: {report.ok[decoder]}/{report.trials} OK" for decoder in ("wba", "tdd")]
        lines.append(f"agreement: {report.agreement}/{report.trials}")
        text = "\n".join(lines)
    else:
        meta = {"trials": report.trials, "tau": report.tau, "seed": report.seed, "agreement": report.agreement}
        text = report_io.render_tables({"roundtrip": report_io.roundtrip_frame(report)}, args.format, meta)
    report_io.write_output(text, args.out)
    return 0 if report.all_ok() else 1


def _cmd_basis_info(args) -> int:
    ctx = load_default_ctx()
    if args.write_ctx:
        ctx = ctx_store.save_ctx(ctx)
        print(f"normal basis written to {ctx_store.default_ctx_path()}", file=sys.stderr)
    info = basis_info(ctx)
    if args.format == "json":
        text = json.dumps(info, indent=2, default=str)
    else:
        hist = pd.DataFrame(
            [{"row weight": w, "rows": c} for w, c in info["row_weight_histogram"].items()]
        )
        meta = {key: value for key, value in info.items() if key != "row_weight_histogram"}
        text = report_io.render_tables({"row weights": hist}, args.format, meta)
    report_io.write_output(text, args.out)
    return 0


COMMANDS = {
    "bench-field": _cmd_bench_field,
    "bench-decoders": _cmd_bench_decoders,
    "count-ops": _cmd_count_ops,
    "complexity": _cmd_complexity,
    "roundtrip": _cmd_roundtrip,
    "basis-info": _cmd_basis_info,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(
            level=logging.DEBUG if args.verbose else logging.WARNING,
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        )
        if hasattr(args, "n"):
            _check_code_args(parser, args)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        return COMMANDS[args.command](args)
    except DecodeFailure as exc:
        print(f"decode failure: {exc}", file=sys.stderr)
        return 1
    except CtxFileError as exc:
        print(f"normal basis file error: {exc}", file=sys.stderr)
        return 1
    except RankCodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
