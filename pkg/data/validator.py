"""Parameter validation for codes, error ranks and benchmark runs."""

from dataclasses import dataclass, field
from typing import List, Optional

from config.defaults import (
    DECODERS,
    FIELD_DEGREE,
    MIN_BENCH_CALLS,
    MIN_BENCH_DECODER_TRIALS,
    WBA_MODES,
)


@dataclass
class ValidationResult:
    is_valid: bool = True
    errors: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    def fail(self, message: str):
        self.is_valid = False
        self.errors.append(message)

    def raise_if_invalid(self):
        if not self.is_valid:
            raise ValueError("; ".join(self.errors))


def validate_code_params(n: int, k: int, m: int = FIELD_DEGREE) -> ValidationResult:
    result = ValidationResult()
    if not isinstance(n, int) or not isinstance(k, int):
        result.fail(f"Code length and dimension must be integers, got n={n!r}, k={k!r}.")
        return result
    if n > m:
        result.fail(f"Code length n={n} exceeds the extension degree m={m}.")
    if k < 1:
        result.fail(f"Code dimension k={k} must be at least 1.")
    if k >= n:
        result.fail(f"Code dimension k={k} must be smaller than the length n={n}.")
    if result.is_valid and (n - k) // 2 == 0:
        result.warnings.append(f"(n, k) = ({n}, {k}) corrects no errors (tau_max = 0).")
    return result


def validate_tau(tau: Optional[int], n: int, k: int) -> ValidationResult:
    result = ValidationResult()
    if tau is None:
        return result
    tau_max = (n - k) // 2
    if tau < 0:
        result.fail(f"Error rank tau={tau} cannot be negative.")
    elif tau > n:
        result.fail(f"Error rank tau={tau} exceeds the code length n={n}.")
    elif tau > tau_max:
        result.warnings.append(f"Error rank tau={tau} is beyond the decoding radius tau_max={tau_max}.")
    return result


def validate_trials(trials: int, minimum: int = 1, label: str = "trials") -> ValidationResult:
    result = ValidationResult()
    if trials < minimum:
        result.fail(f"{label} must be at least {minimum}, got {trials}.")
    return result


def validate_bench_calls(calls: int, minimum: int = MIN_BENCH_CALLS) -> ValidationResult:
    return validate_trials(calls, minimum, "calls")


def validate_bench_trials(trials: int, minimum: int = MIN_BENCH_DECODER_TRIALS) -> ValidationResult:
    return validate_trials(trials, minimum, "decoder benchmark trials")


def validate_decoder(decoder: str, mode: Optional[str] = None) -> ValidationResult:
    result = ValidationResult()
    if decoder not in DECODERS:
        result.fail(f"Unknown decoder {decoder!r}; choose from {', '.join(DECODERS)}.")
    if mode is not None and mode not in WBA_MODES:
        result.fail(f"Unknown WBA mode {mode!r}; choose from {', '.join(WBA_MODES)}.")
    return result
