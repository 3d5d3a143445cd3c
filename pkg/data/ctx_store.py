"""Versioned text file for the normal basis context, guarded by a checksum line."""

import hashlib
import logging
from pathlib import Path
from typing import List, Optional

from config.defaults import CTX_FILE_NAME, CTX_FORMAT_VERSION, FIELD_DEGREE
from engine.basis_builder import ctx_from_alpha
from engine.errors import CtxFileError, InternalConsistencyError
from engine.gf_poly import hex_to_int, int_to_hex
from models.normal_basis import NormalBasisCtx

logger = logging.getLogger(__name__)


def default_ctx_path() -> Path:
    return Path(__file__).resolve().parent / CTX_FILE_NAME


def _body_lines(ctx: NormalBasisCtx) -> List[str]:
    lines = [
        "# GF(2^127) normal basis: multiplication table M with alpha * alpha^[row] = sum alpha^[col]",
        f"version {CTX_FORMAT_VERSION}",
        f"m {ctx.m}",
        f"complexity {ctx.complexity}",
        f"self_dual {int(ctx.self_dual)}",
        f"alpha {int_to_hex(ctx.alpha_poly)}",
        f"entries {len(ctx.entries)}",
    ]
    lines.extend(f"{row} {col}" for row, col in ctx.entries)
    return lines


def ctx_checksum(lines: List[str]) -> str:
    return hashlib.sha256("\n".join(lines).encode("utf-8")).hexdigest()


def dump_ctx(ctx: NormalBasisCtx) -> str:
    lines = _body_lines(ctx)
    lines.append(f"checksum {ctx_checksum(lines)}")
    return "\n".join(lines) + "\n"


def save_ctx(ctx: NormalBasisCtx, path: Optional[Path] = None) -> NormalBasisCtx:
    """Write the ctx file and return the ctx carrying its checksum."""
    path = Path(path) if path is not None else default_ctx_path()
    text = dump_ctx(ctx)
    path.write_text(text, encoding="utf-8")
    logger.info("normal basis written to %s (C_M=%d)", path, ctx.complexity)
    checksum = text.rstrip("\n").rsplit(" ", 1)[-1]
    return NormalBasisCtx(**{**ctx.__dict__, "checksum": checksum})


def _field(line: str, key: str) -> str:
    parts = line.split()
    if len(parts) != 2 or parts[0] != key:
        raise CtxFileError(f"Expected '{key} <value>', found {line!r}")
    return parts[1]


def parse_ctx(text: str) -> NormalBasisCtx:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or not lines[-1].startswith("checksum "):
        raise CtxFileError("Missing checksum line")
    body, checksum = lines[:-1], _field(lines[-1], "checksum")
    if ctx_checksum(body) != checksum:
        raise CtxFileError("Checksum mismatch: the ctx file is corrupted")

    header = [line for line in body if not line.startswith("#")]
    if len(header) < 6:
        raise CtxFileError("Truncated ctx file")
    try:
        version = int(_field(header[0], "version"))
        m = int(_field(header[1], "m"))
        complexity = int(_field(header[2], "complexity"))
        self_dual = _field(header[3], "self_dual") == "1"
        alpha = hex_to_int(_field(header[4], "alpha"))
        count = int(_field(header[5], "entries"))
        entries = tuple(tuple(int(x) for x in line.split()) for line in header[6:])
    except ValueError as exc:
        raise CtxFileError(f"Malformed ctx file: {exc}") from exc

    if version != CTX_FORMAT_VERSION:
        raise CtxFileError(f"Unsupported ctx format version {version} (expected {CTX_FORMAT_VERSION})")
    if m != FIELD_DEGREE:
        raise CtxFileError(f"ctx file is for m={m}, this build supports m={FIELD_DEGREE}")
    if count != len(entries) or complexity != count:
        raise CtxFileError(f"Entry count mismatch: header says {count}/{complexity}, found {len(entries)}")

    rows = [0] * m
    for entry in entries:
        if len(entry) != 2 or not all(0 <= x < m for x in entry):
            raise CtxFileError(f"Bad table entry {entry}")
        rows[entry[0]] |= 1 << entry[1]

    try:
        ctx = ctx_from_alpha(alpha, expected_rows=rows, checksum=checksum, m=m)
    except InternalConsistencyError as exc:
        raise CtxFileError(f"ctx file does not describe the basis of its alpha: {exc}") from exc
    if ctx.self_dual != self_dual:
        raise CtxFileError("self_dual flag disagrees with the trace check")
    return ctx


def load_ctx(path: Optional[Path] = None) -> NormalBasisCtx:
    path = Path(path) if path is not None else default_ctx_path()
    return parse_ctx(path.read_text(encoding="utf-8"))
