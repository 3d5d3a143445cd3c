"""Plotly chart builders for the benchmark dashboard."""

from typing import Dict, List

import pandas as pd
import plotly.express as px
import plotly.graph_objects as go

from config.defaults import OP_KINDS, OP_LABELS, REFERENCE_DECODE_SECONDS, REFERENCE_OP_COUNTS
from models.reports import BenchReport, OpCountReport

MEASURED = "#4A90D9"
PUBLISHED = "#E8734A"


def op_counts_vs_reference_bar(report: OpCountReport) -> go.Figure:
    """Measured calls per decode next to the published counts, log scale."""
    averages = report.averages()
    reference = REFERENCE_OP_COUNTS.get(report.decoder, {})
    rows = []
    for kind in OP_KINDS:
        if averages[kind] == 0 and kind not in reference:
            continue
        rows.append({"operation": OP_LABELS[kind], "source": "measured", "calls": averages[kind]})
        if kind in reference:
            rows.append({"operation": OP_LABELS[kind], "source": "published", "calls": reference[kind]})
    fig = px.bar(
        pd.DataFrame(rows), x="operation", y="calls", color="source",
        barmode="group", log_y=True,
        title=f"{report.decoder.upper()}: calls per decode ({report.trials} decodes)",
        color_discrete_map={"measured": MEASURED, "published": PUBLISHED},
    )
    fig.update_layout(legend_title_text="", height=420)
    return fig


def field_times_bar(reports: List[BenchReport]) -> go.Figure:
    rows = [
        {"operation": OP_LABELS[kind], "basis": report.label, "seconds": report.seconds_per_million[kind]}
        for report in reports
        for kind in OP_KINDS
        if kind in report.seconds_per_million
    ]
    fig = px.bar(
        pd.DataFrame(rows), x="operation", y="seconds", color="basis",
        barmode="group", log_y=True,
        labels={"seconds": "CPU s per 10^6 calls"},
        title="Field primitives",
        color_discrete_map={"poly": MEASURED, "normal": PUBLISHED},
    )
    fig.update_layout(legend_title_text="", height=420)
    return fig


def decoder_times_bar(report: BenchReport) -> go.Figure:
    """Per-decode time, measured vs published (published scaled to one decode)."""
    decoders = ["wba", "tdd"]
    fig = go.Figure(data=[
        go.Bar(name="measured", x=[d.upper() for d in decoders],
               y=[report.per_decode_seconds.get(d, 0.0) for d in decoders], marker_color=MEASURED),
        go.Bar(name="published", x=[d.upper() for d in decoders],
               y=[REFERENCE_DECODE_SECONDS[d] / 1000 for d in decoders], marker_color=PUBLISHED),
    ])
    fig.update_layout(barmode="group", yaxis_title="seconds per decode", height=380,
                      title=f"Decoding time ({report.trials} decodes)")
    return fig


def complexity_rows_bar(df: pd.DataFrame, title: str) -> go.Figure:
    steps = df[df["Step"] != "Total"]
    fig = px.bar(
        steps, x="Step", y=["Additions", "Multiplications"],
        barmode="group", title=title,
        labels={"value": "GF(2) operations", "variable": ""},
        color_discrete_map={"Additions": MEASURED, "Multiplications": PUBLISHED},
    )
    fig.update_layout(legend_title_text="", height=400)
    return fig


def row_weight_bar(histogram: Dict[int, int]) -> go.Figure:
    fig = px.bar(
        x=list(histogram.keys()), y=list(histogram.values()),
        labels={"x": "nonzero entries in row", "y": "rows"},
        title="Multiplication table row weights",
    )
    fig.update_traces(marker_color=MEASURED)
    fig.update_layout(height=350, xaxis_type="category")
    return fig
