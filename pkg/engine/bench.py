"""Operation counting, timing benchmarks and decoder round trips."""

import logging
import platform
import time
from typing import Callable, Dict, List, Optional

import numpy as np

from config.defaults import (
    BENCH_POOL_SIZE,
    DEFAULT_K,
    DEFAULT_N,
    DEFAULT_WBA_MODE,
    INVERT_CALL_DIVISOR,
    MIN_BENCH_CALLS,
    MIN_BENCH_DECODER_TRIALS,
    MIN_INVERT_CALLS,
)
from data.sample_data import make_instance
from data.validator import validate_bench_calls, validate_bench_trials, validate_decoder, validate_trials
from engine.basis_builder import load_default_ctx
from engine.decoder_tdd import tdd_decode
from engine.decoder_wba import wba_decode
from engine.errors import DecodeFailure
from engine.gabidulin import gen_code, tdd_precompute
from engine.gf_normal import NormalBasisField
from engine.gf_poly import PolyBasisField
from engine.instrumentation import CountingNormalField, CountingPolyField
from models.normal_basis import NormalBasisCtx
from models.reports import BenchReport, OpCountReport, RoundtripReport

logger = logging.getLogger(__name__)


def _environment() -> Dict[str, str]:
    return {
        "cpu": platform.processor() or platform.machine(),
        "python": platform.python_version(),
        "implementation": platform.python_implementation(),
        "numpy": np.__version__,
    }


def _trial_seed(rng: np.random.Generator) -> int:
    return int(rng.integers(0, 2**63 - 1))


# --- operation counts ---

def count_ops(
    decoder: str,
    trials: int,
    seed: int,
    n: int = DEFAULT_N,
    k: int = DEFAULT_K,
    tau: Optional[int] = None,
    ctx: Optional[NormalBasisCtx] = None,
    mode: str = DEFAULT_WBA_MODE,
) -> OpCountReport:
    """Average primitive calls per decode over fresh random codes, messages and rank-τ errors."""
    validate_decoder(decoder, mode).raise_if_invalid()
    validate_trials(trials).raise_if_invalid()
    rng = np.random.default_rng(seed)
    ctx = ctx or (load_default_ctx() if decoder == "tdd" else None)

    report = OpCountReport(decoder=decoder, seed=seed, n=n, k=k)
    for trial in range(trials):
        code = gen_code(n, k, rng)
        instance = make_instance(code, tau, rng)
        report.tau = instance.tau
        if decoder == "wba":
            field = CountingPolyField()
            decoded = wba_decode(code, instance.received, mode, _trial_seed(rng), field)
        else:
            tdd_precompute(code, ctx)
            field = CountingNormalField(ctx)
            decoded = tdd_decode(code, instance.received, field=field)
        if decoded != instance.msg:
            raise DecodeFailure(
                f"{decoder} decode {trial} of {trials} (seed {seed}, tau {instance.tau}) returned a wrong message"
            )
        report.merge(field.snapshot(), dict(field.nested))
        report.trials += 1
    return report


# --- field timing ---

def _time_calls(fn: Callable[[int], int], calls: int) -> tuple:
    checksum = 0
    start = time.process_time_ns()
    for i in range(calls):
        checksum ^= fn(i)
    elapsed = time.process_time_ns() - start
    return elapsed / 1e9, checksum


def _field_ops(basis: str, pool_a: List[int], pool_b: List[int], ctx: Optional[NormalBasisCtx]) -> Dict[str, Callable]:
    size = len(pool_a)
    if basis == "poly":
        field = PolyBasisField()
        return {
            "add": lambda i: field.add(pool_a[i % size], pool_b[i % size]),
            "multiply": lambda i: field.mul(pool_a[i % size], pool_b[i % size]),
            "square": lambda i: field.square(pool_a[i % size]),
            "invert": lambda i: field.inv(pool_a[i % size]),
        }
    field = NormalBasisField(ctx)
    tables = [field.make_shift_table(b) for b in pool_b]
    tables_a = [field.make_shift_table(a) for a in pool_a]
    m = field.degree
    return {
        "add": lambda i: field.add(pool_a[i % size], pool_b[i % size]),
        "multiply": lambda i: field.mul(pool_a[i % size], pool_b[i % size]),
        "set_shift_table": lambda i: field.make_shift_table(pool_a[i % size]).entries[1],
        "multiply_shift_tables": lambda i: field.mul_shift_tables(tables_a[i % size], tables[i % size]),
        "mul_alpha_pow": lambda i: field.mul_alpha_pow(pool_a[i % size], i % m),
        "q_power": lambda i: field.qpow(pool_a[i % size], 1 + i % (m - 1)),
        "square": lambda i: field.square(pool_a[i % size]),
        "invert": lambda i: field.inv(pool_a[i % size]),
    }


def bench_field(
    basis: str,
    calls: int,
    seed: int = 0,
    ctx: Optional[NormalBasisCtx] = None,
    config: Optional[dict] = None,
) -> BenchReport:
    """Mean CPU seconds per 10^6 calls of every primitive of one basis.

    Outputs are folded into a checksum so no call is dead code. Inversions run on
    calls // INVERT_CALL_DIVISOR (at least MIN_INVERT_CALLS) calls.
    """
    cfg = config or {}
    validate_bench_calls(calls, cfg.get("min_calls", MIN_BENCH_CALLS)).raise_if_invalid()
    if basis not in ("poly", "normal"):
        raise ValueError(f"Unknown basis {basis!r}; choose poly or normal")
    if basis == "normal":
        ctx = ctx or load_default_ctx()

    rng = np.random.default_rng(seed)
    field = PolyBasisField()
    pool_size = cfg.get("pool_size", BENCH_POOL_SIZE)
    pool_a = [field.random_nonzero(rng) for _ in range(pool_size)]
    pool_b = [field.random_nonzero(rng) for _ in range(pool_size)]

    report = BenchReport(kind="field", label=basis, seed=seed, environment=_environment())
    checksum = 0
    for op, fn in _field_ops(basis, pool_a, pool_b, ctx).items():
        n_calls = calls
        if op == "invert":
            n_calls = max(calls // cfg.get("invert_divisor", INVERT_CALL_DIVISOR), cfg.get("min_invert_calls", MIN_INVERT_CALLS))
        seconds, folded = _time_calls(fn, n_calls)
        checksum ^= folded
        report.calls[op] = n_calls
        report.seconds_per_million[op] = seconds / n_calls * 1e6
        logger.debug("%s %s: %.4f s per 10^6 calls", basis, op, report.seconds_per_million[op])
    report.checksum = checksum
    return report


# --- decoder timing ---

def bench_decoders(
    trials: int,
    seed: int,
    n: int = DEFAULT_N,
    k: int = DEFAULT_K,
    tau: Optional[int] = None,
    ctx: Optional[NormalBasisCtx] = None,
    config: Optional[dict] = None,
) -> BenchReport:
    """Both decoders on identical received words of one code; the TDD precomputation is done up front."""
    cfg = config or {}
    validate_bench_trials(trials, cfg.get("min_trials", MIN_BENCH_DECODER_TRIALS)).raise_if_invalid()
    repetitions = cfg.get("repetitions", 1)
    ctx = ctx or load_default_ctx()
    rng = np.random.default_rng(seed)
    code = gen_code(n, k, rng)
    instances = [make_instance(code, tau, rng) for _ in range(trials)]
    wba_seeds = [_trial_seed(rng) for _ in range(trials)]
    tdd_precompute(code, ctx)

    wba_field = PolyBasisField()
    tdd_field = NormalBasisField(ctx)
    runs: Dict[str, List[float]] = {"wba": [], "tdd": []}
    for _ in range(repetitions):
        start = time.process_time_ns()
        for inst, s in zip(instances, wba_seeds):
            wba_decode(code, inst.received, DEFAULT_WBA_MODE, s, wba_field)
        runs["wba"].append((time.process_time_ns() - start) / 1e9)

        start = time.process_time_ns()
        for inst in instances:
            tdd_decode(code, inst.received, field=tdd_field)
        runs["tdd"].append((time.process_time_ns() - start) / 1e9)

    report = BenchReport(
        kind="decoders",
        label="wba/tdd",
        trials=trials,
        repetitions=repetitions,
        seed=seed,
        environment=_environment(),
    )
    for decoder, samples in runs.items():
        mean = float(np.mean(samples))
        report.decoder_seconds[decoder] = mean
        report.per_decode_seconds[decoder] = mean / trials
        report.calls[decoder] = trials * repetitions
        if repetitions > 1:
            report.ratios[f"{decoder}_cv"] = float(np.std(samples) / mean) if mean else 0.0
    wba = report.decoder_seconds["wba"]
    report.ratios["tdd/wba"] = report.decoder_seconds["tdd"] / wba if wba else float("inf")
    return report


# --- round trips ---

def roundtrip(
    trials: int,
    tau: Optional[int],
    seed: int,
    n: int = DEFAULT_N,
    k: int = DEFAULT_K,
    mode: str = DEFAULT_WBA_MODE,
    ctx: Optional[NormalBasisCtx] = None,
) -> RoundtripReport:
    """Decode shared instances of one code with both decoders and compare against the planted message."""
    validate_trials(trials).raise_if_invalid()
    ctx = ctx or load_default_ctx()
    rng = np.random.default_rng(seed)
    code = gen_code(n, k, rng)
    tdd_field = NormalBasisField(ctx)

    report = RoundtripReport(trials=trials, tau=code.tau_max if tau is None else tau, seed=seed, n=n, k=k)
    report.ok = {"wba": 0, "tdd": 0}
    report.failures = {"wba": 0, "tdd": 0}
    for trial in range(trials):
        instance = make_instance(code, tau, rng)
        decoded = {}
        for decoder in ("wba", "tdd"):
            try:
                if decoder == "wba":
                    decoded[decoder] = wba_decode(code, instance.received, mode, _trial_seed(rng))
                else:
                    decoded[decoder] = tdd_decode(code, instance.received, field=tdd_field)
            except DecodeFailure as exc:
                logger.warning("%s failed on trial %d: %s", decoder, trial, exc)
                report.failures[decoder] += 1
                decoded[decoder] = None
                continue
            if decoded[decoder] == instance.msg:
                report.ok[decoder] += 1
        if decoded["wba"] is not None and decoded["wba"] == decoded["tdd"]:
            report.agreement += 1
    return report
