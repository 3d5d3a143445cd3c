"""Hex JSON serialization of codes and decoding instances."""

import json
from pathlib import Path
from typing import Union

from engine.gf_poly import hex_to_int, int_to_hex
from models.code import CodeInstance, GabidulinCode


def code_to_dict(code: GabidulinCode) -> dict:
    return {
        "m": code.m,
        "n": code.n,
        "k": code.k,
        "seed": code.seed,
        "g": [int_to_hex(v) for v in code.g],
        "h": [int_to_hex(v) for v in code.h],
    }


def code_from_dict(data: dict) -> GabidulinCode:
    try:
        g = tuple(hex_to_int(v) for v in data["g"])
        h = tuple(hex_to_int(v) for v in data.get("h", []))
        n, k = int(data["n"]), int(data["k"])
    except KeyError as exc:
        raise ValueError(f"Code file is missing the {exc.args[0]!r} field") from exc
    if len(g) != n:
        raise ValueError(f"Code file lists {len(g)} generating elements for n={n}")
    if h and len(h) != n:
        raise ValueError(f"Code file lists {len(h)} dual elements for n={n}")
    return GabidulinCode(n=n, k=k, g=g, m=int(data.get("m", 127)), h=h, seed=data.get("seed"))


def instance_to_dict(instance: CodeInstance) -> dict:
    return {
        "tau": instance.tau,
        "seed": instance.seed,
        "msg": [int_to_hex(v) for v in instance.msg],
        "codeword": [int_to_hex(v) for v in instance.codeword],
        "error": [int_to_hex(v) for v in instance.error],
        "received": [int_to_hex(v) for v in instance.received],
    }


def instance_from_dict(data: dict) -> CodeInstance:
    return CodeInstance(
        msg=[hex_to_int(v) for v in data["msg"]],
        codeword=[hex_to_int(v) for v in data["codeword"]],
        error=[hex_to_int(v) for v in data["error"]],
        received=[hex_to_int(v) for v in data["received"]],
        tau=int(data["tau"]),
        seed=data.get("seed"),
    )


def save_code(code: GabidulinCode, path: Union[str, Path]):
    Path(path).write_text(json.dumps(code_to_dict(code), indent=2), encoding="utf-8")


def load_code(path: Union[str, Path]) -> GabidulinCode:
    return code_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
