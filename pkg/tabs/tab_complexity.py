"""Tab 1: Complexity: theoretical GF(2) operation counts of both decoders."""

import streamlit as st

from components.charts import complexity_rows_bar
from components.metrics_cards import deviation_metric, render_metric_row
from components.tables import render_styled_table, render_tolerance_table
from config.defaults import COMPLEXITY_TOLERANCE, REFERENCE_COMPLEXITY_TOTALS, TARGET_BASIS_COMPLEXITY
from engine.complexity import complexity_report, complexity_totals, complexity_tdd, complexity_wba
from models.reports import ComplexityParams


def render(sidebar_state):
    """Render the Complexity tab."""
    st.header("Theoretical Complexity")
    if not sidebar_state.valid:
        st.info("Fix the code parameters in the sidebar first.")
        return

    col1, col2 = st.columns(2)
    with col1:
        c_m = st.number_input("C_M (table weight)", min_value=1, value=TARGET_BASIS_COMPLEXITY, key="cx_cm")
    with col2:
        c_inv = st.number_input("C_inv (inversion cost)", min_value=0, value=0, key="cx_cinv")

    params = ComplexityParams(n=sidebar_state.n, k=sidebar_state.k, tau=sidebar_state.tau, c_m=int(c_m), c_inv=int(c_inv))
    tables = complexity_report(params)
    wba = complexity_totals(complexity_wba(params))
    tdd = complexity_totals(complexity_tdd(params))

    render_metric_row([
        deviation_metric("WBA additions", wba["additions"], REFERENCE_COMPLEXITY_TOTALS["wba"]["additions"], COMPLEXITY_TOLERANCE["wba"]),
        deviation_metric("WBA multiplications", wba["multiplications"], REFERENCE_COMPLEXITY_TOTALS["wba"]["multiplications"], COMPLEXITY_TOLERANCE["wba"]),
        deviation_metric("TDD additions", tdd["additions"], REFERENCE_COMPLEXITY_TOTALS["tdd"]["additions"], COMPLEXITY_TOLERANCE["tdd"]),
        deviation_metric("TDD multiplications", tdd["multiplications"], REFERENCE_COMPLEXITY_TOTALS["tdd"]["multiplications"], COMPLEXITY_TOLERANCE["tdd"]),
    ])
    st.caption(f"tau = {params.tau_eff}. Published totals refer to (n, k) = (113, 3), C_M = 501, C_inv = 0.")

    st.divider()
    col1, col2 = st.columns(2)
    with col1:
        render_styled_table(tables["wba"], title="Welch-Berlekamp")
        st.plotly_chart(complexity_rows_bar(tables["wba"], "WBA per step"), use_container_width=True)
    with col2:
        render_styled_table(tables["tdd"], title="Transform domain")
        st.plotly_chart(complexity_rows_bar(tables["tdd"], "TDD per step"), use_container_width=True)

    st.subheader("Totals against published values")
    render_tolerance_table(tables["summary"])
