"""Rank-metric decoding benchmark dashboard: Streamlit entry point."""

import streamlit as st
import sys
import os

# Add project root to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from components.sidebar import render_sidebar
from data.session_store import initialize_session_state
from tabs import (
    tab_complexity,
    tab_op_counts,
    tab_field_bench,
    tab_decoder_bench,
    tab_basis,
)


def main():
    st.set_page_config(
        page_title="Rank-Metric Bench",
        page_icon="🧮",
        layout="wide",
        initial_sidebar_state="expanded",
    )

    initialize_session_state()
    sidebar_state = render_sidebar()

    tab1, tab2, tab3, tab4, tab5 = st.tabs([
        "📐 Complexity",
        "🔢 Operation Counts",
        "⏱️ Field Benchmark",
        "🏁 Decoder Benchmark",
        "🧩 Normal Basis",
    ])

    with tab1:
        tab_complexity.render(sidebar_state)
    with tab2:
        tab_op_counts.render(sidebar_state)
    with tab3:
        tab_field_bench.render(sidebar_state)
    with tab4:
        tab_decoder_bench.render(sidebar_state)
    with tab5:
        tab_basis.render(sidebar_state)


if __name__ == "__main__":
    main()
