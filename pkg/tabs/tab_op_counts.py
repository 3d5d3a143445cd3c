"""Tab 2: Operation Counts: primitive calls per decode through the counting backends."""

import streamlit as st

from components.charts import op_counts_vs_reference_bar
from components.tables import render_deviation_table
from config.defaults import DECODERS, OP_COUNT_TOLERANCE
from data.report_io import op_count_frame
from data.session_store import get_op_counts, set_op_counts
from engine.bench import count_ops
from engine.errors import DecodeFailure


def render(sidebar_state):
    """Render the Operation Counts tab."""
    st.header("Operation Counts per Decode")
    st.caption("Fresh random code, message and rank-tau error for every decode.")

    col1, col2 = st.columns([2, 1])
    with col1:
        decoder = st.radio("Decoder", DECODERS, horizontal=True, format_func=str.upper, key="ops_decoder")
    with col2:
        trials = st.number_input("Decodes", min_value=1, max_value=1000, value=5, key="ops_trials")

    if st.button("Count operations", type="primary", disabled=not sidebar_state.valid):
        with st.spinner(f"Running {trials} {decoder.upper()} decodes..."):
            try:
                report = count_ops(
                    decoder, int(trials), sidebar_state.seed, sidebar_state.n, sidebar_state.k,
                    sidebar_state.tau, mode=sidebar_state.wba_mode,
                )
                set_op_counts(report)
            except DecodeFailure as exc:
                st.error(f"Decode failure: {exc}")

    reports = get_op_counts()
    if not reports:
        st.info("No counts yet. Pick a decoder and run.")
        return

    for name in DECODERS:
        report = reports.get(name)
        if report is None:
            continue
        st.subheader(f"{name.upper()} (n={report.n}, k={report.k}, tau={report.tau}, seed={report.seed})")
        render_deviation_table(op_count_frame(report), tolerance_pct=100 * OP_COUNT_TOLERANCE)
        st.plotly_chart(op_counts_vs_reference_bar(report), use_container_width=True)
