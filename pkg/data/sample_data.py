"""Seeded decoding instances: random message, planted rank-τ error, received word."""

import json
import os
from typing import Optional, Union

import numpy as np

from config.defaults import DEFAULT_K, DEFAULT_N, DEFAULT_SEED
from data.code_io import code_to_dict, instance_to_dict
from engine.gabidulin import encode, gen_code, sample_error
from engine.gf_poly import random_int
from models.code import CodeInstance, GabidulinCode


def make_instance(
    code: GabidulinCode,
    tau: Optional[int] = None,
    seed: Union[int, np.random.Generator, None] = None,
) -> CodeInstance:
    """tau defaults to the decoding radius of the code."""
    tau = code.tau_max if tau is None else tau
    rng = np.random.default_rng(seed)
    msg = [random_int(rng) for _ in range(code.k)]
    codeword = encode(code, msg)
    error = sample_error(code.n, tau, rng)
    received = [c ^ e for c, e in zip(codeword, error)]
    return CodeInstance(
        msg=msg,
        codeword=codeword,
        error=error,
        received=received,
        tau=tau,
        seed=seed if isinstance(seed, int) else None,
    )


def generate_sample_files(output_dir: str, n: int = DEFAULT_N, k: int = DEFAULT_K, seed: int = DEFAULT_SEED):
    """Write one code and one radius-τ instance as hex JSON."""
    os.makedirs(output_dir, exist_ok=True)
    code = gen_code(n, k, seed)
    instance = make_instance(code, seed=seed)
    with open(os.path.join(output_dir, f"code_{n}_{k}.json"), "w", encoding="utf-8") as fh:
        json.dump(code_to_dict(code), fh, indent=2)
    with open(os.path.join(output_dir, f"instance_{n}_{k}_tau{instance.tau}.json"), "w", encoding="utf-8") as fh:
        json.dump(instance_to_dict(instance), fh, indent=2)


if __name__ == "__main__":
    out = os.path.join(os.path.dirname(__file__), "..", "sample_files")
    generate_sample_files(out)
    print("Sample code and instance written to sample_files/")
