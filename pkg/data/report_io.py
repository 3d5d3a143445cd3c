"""Report tables (pandas) and their Markdown / CSV / JSON renderings."""

import json
from pathlib import Path
from typing import Dict, List, Optional, Union

import pandas as pd

from config.defaults import OP_KINDS, OP_LABELS, OUTPUT_FORMATS, REFERENCE_FIELD_TIMES, REFERENCE_OP_COUNTS
from models.reports import BenchReport, OpCountReport, RoundtripReport

Tables = Dict[str, pd.DataFrame]


# --- report -> DataFrame ---

def op_count_frame(report: OpCountReport) -> pd.DataFrame:
    averages = report.averages()
    reference = REFERENCE_OP_COUNTS.get(report.decoder, {})
    nested = report.nested
    rows = []
    for kind in OP_KINDS:
        ref = reference.get(kind)
        avg = averages[kind]
        rows.append({
            "Operation": OP_LABELS[kind],
            "Average": round(avg, 1),
            "Published": ref if ref is not None else "-",
            "Deviation (%)": round(100 * (avg - ref) / ref, 1) if ref else "-",
            "Inside inversions": round(nested.get(kind, 0) / report.trials, 1) if report.trials else 0.0,
        })
    return pd.DataFrame(rows)


def bench_field_frame(reports: List[BenchReport]) -> pd.DataFrame:
    """One row per operation, one column per basis, "-" where a basis lacks the operation."""
    rows = []
    for kind in OP_KINDS:
        row = {"Operation": OP_LABELS[kind]}
        for report in reports:
            value = report.seconds_per_million.get(kind)
            row[f"{report.label} [s / 10^6 calls]"] = round(value, 4) if value is not None else "-"
            published = REFERENCE_FIELD_TIMES.get(report.label, {}).get(kind)
            row[f"{report.label} published"] = published if published is not None else "-"
        rows.append(row)
    return pd.DataFrame(rows)


def bench_decoders_frame(report: BenchReport) -> pd.DataFrame:
    rows = []
    for decoder in ("wba", "tdd"):
        rows.append({
            "Decoder": decoder.upper(),
            "Decodes": report.trials,
            "Repetitions": report.repetitions,
            "Total [s]": round(report.decoder_seconds.get(decoder, 0.0), 4),
            "Per decode [ms]": round(1000 * report.per_decode_seconds.get(decoder, 0.0), 3),
        })
    return pd.DataFrame(rows)


def roundtrip_frame(report: RoundtripReport) -> pd.DataFrame:
    return pd.DataFrame([
        {
            "Decoder": decoder.upper(),
            "OK": f"{report.ok[decoder]}/{report.trials}",
            "Decode failures": report.failures.get(decoder, 0),
            "tau": report.tau,
        }
        for decoder in ("wba", "tdd")
    ])


# --- rendering ---

def _cell(value) -> str:
    if isinstance(value, float):
        return f"{value:g}" if abs(value) < 1e6 else f"{value:.4e}"
    return str(value)


def frame_to_markdown(df: pd.DataFrame) -> str:
    header = "| " + " | ".join(str(c) for c in df.columns) + " |"
    rule = "|" + "|".join("---" for _ in df.columns) + "|"
    body = ["| " + " | ".join(_cell(v) for v in row) + " |" for row in df.itertuples(index=False)]
    return "\n".join([header, rule, *body])


def render_tables(tables: Tables, fmt: str, meta: Optional[dict] = None) -> str:
    if fmt not in OUTPUT_FORMATS:
        raise ValueError(f"Unknown output format {fmt!r}; choose from {', '.join(OUTPUT_FORMATS)}")
    if fmt == "json":
        payload = {name: df.to_dict(orient="records") for name, df in tables.items()}
        if meta:
            payload["meta"] = meta
        return json.dumps(payload, indent=2, default=str)
    if fmt == "csv":
        parts = []
        for name, df in tables.items():
            parts.append(f"# {name}\n" + df.to_csv(index=False))
        return "\n".join(parts)
    parts = []
    for name, df in tables.items():
        parts.append(f"### {name}\n\n{frame_to_markdown(df)}\n")
    if meta:
        parts.append("\n".join(f"- {key}: {value}" for key, value in meta.items()))
    return "\n".join(parts)


def op_count_json(report: OpCountReport) -> str:
    """Flat JSON with the eight counter keys plus trials and seed."""
    return json.dumps(report.to_dict(), indent=2)


def write_output(text: str, out: Optional[Union[str, Path]] = None) -> None:
    if out is None:
        print(text)
        return
    Path(out).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
