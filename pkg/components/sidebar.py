"""Global sidebar controls for code parameters, seed and WBA mode."""

from dataclasses import dataclass
from typing import Optional

import streamlit as st

from config.defaults import DEFAULT_K, DEFAULT_N, DEFAULT_SEED, DEFAULT_WBA_MODE, FIELD_DEGREE, WBA_MODES
from data.session_store import clear_results
from data.validator import validate_code_params


@dataclass
class SidebarState:
    n: int
    k: int
    tau: Optional[int]   # None means tau_max
    seed: int
    wba_mode: str
    valid: bool = True


def render_sidebar() -> SidebarState:
    """Render the global sidebar controls and return current state."""
    with st.sidebar:
        st.title("Rank-Metric Bench")
        st.caption(f"Gabidulin codes over GF(2^{FIELD_DEGREE})")
        st.divider()

        n = st.number_input("Code length n", min_value=2, max_value=FIELD_DEGREE, value=DEFAULT_N, key="sidebar_n")
        k = st.number_input("Dimension k", min_value=1, max_value=FIELD_DEGREE - 1, value=DEFAULT_K, key="sidebar_k")
        check = validate_code_params(int(n), int(k))
        tau_max = (int(n) - int(k)) // 2 if check.is_valid else 0

        use_radius = st.checkbox("Error rank = tau_max", value=True, key="sidebar_use_radius")
        tau = None
        if not use_radius:
            tau = st.slider("Error rank tau", min_value=0, max_value=max(tau_max, 1), value=tau_max, key="sidebar_tau")

        seed = st.number_input("Seed", min_value=0, value=DEFAULT_SEED, step=1, key="sidebar_seed")
        mode = st.selectbox(
            "WBA mode",
            options=WBA_MODES,
            index=WBA_MODES.index(DEFAULT_WBA_MODE),
            key="sidebar_mode",
        )

        st.divider()
        if check.is_valid:
            st.success(f"d = {int(n) - int(k) + 1}, tau_max = {tau_max}")
        for error in check.errors:
            st.error(error)
        for warning in check.warnings:
            st.warning(warning)
        if st.button("Clear results", key="sidebar_clear"):
            clear_results()

    state = SidebarState(n=int(n), k=int(k), tau=tau, seed=int(seed), wba_mode=mode, valid=check.is_valid)
    st.session_state["sidebar_state"] = {
        "n": state.n, "k": state.k, "tau": state.tau, "seed": state.seed, "wba_mode": state.wba_mode,
    }
    return state
