"""Reusable KPI metric card widgets."""

import streamlit as st


def render_metric_row(metrics: list[dict]):
    """Render a row of metric cards.

    Each metric dict should have: label, value, and optionally delta, delta_color.
    """
    cols = st.columns(len(metrics))
    for col, m in zip(cols, metrics):
        with col:
            st.metric(
                label=m["label"],
                value=m["value"],
                delta=m.get("delta"),
                delta_color=m.get("delta_color", "normal"),
            )


def deviation_metric(label: str, value: float, reference: float, tolerance: float) -> dict:
    """Metric card dict whose delta shows the relative deviation from a published value."""
    dev = (value - reference) / reference if reference else 0.0
    return {
        "label": label,
        "value": f"{value:,.4g}",
        "delta": f"{dev:+.1%} vs {reference:,.4g}",
        "delta_color": "off" if abs(dev) <= tolerance else "inverse",
    }


def render_status_card(message: str, ok: bool):
    if ok:
        st.success(message)
    else:
        st.error(message)
