"""Tab 5: Normal Basis: the self-dual basis behind the transform-domain decoder."""

import pandas as pd
import streamlit as st

from components.charts import row_weight_bar
from components.metrics_cards import render_metric_row, render_status_card
from components.tables import render_styled_table
from data.ctx_store import default_ctx_path
from data.session_store import get_run_log
from engine.basis_builder import basis_info, load_default_ctx, verify_products
from engine.errors import RankCodeError


def render(sidebar_state):
    """Render the Normal Basis tab."""
    st.header("Normal Basis")

    if not default_ctx_path().exists():
        st.warning("No basis file; the basis is built in memory (this takes a while). "
                   "Run `python cli.py basis-info --write-ctx` to store it.")
    try:
        ctx = load_default_ctx()
    except RankCodeError as exc:
        st.error(f"Normal basis unavailable: {exc}")
        return

    info = basis_info(ctx)
    render_metric_row([
        {"label": "m", "value": str(info["m"])},
        {"label": "C_M", "value": str(info["complexity"]), "delta": f"{info['complexity'] - (2 * ctx.m - 1)} above optimal",
         "delta_color": "off"},
        {"label": "Self-dual", "value": "yes" if info["self_dual"] else "no"},
    ])
    st.code(f"alpha (polynomial basis) = 0x{info['alpha']}", language=None)
    st.plotly_chart(row_weight_bar(info["row_weight_histogram"]), use_container_width=True)

    pairs = st.number_input("Cross-basis check: random products", min_value=10, value=200, key="nb_pairs")
    if st.button("Verify table multiplication"):
        ok = verify_products(ctx, int(pairs), seed=sidebar_state.seed)
        render_status_card(f"{'All' if ok else 'Not all'} {int(pairs)} products agree with the polynomial basis", ok)

    log = get_run_log()
    if log:
        st.divider()
        render_styled_table(pd.DataFrame(log), title="Runs this session")
