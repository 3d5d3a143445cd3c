"""Typed wrapper around st.session_state for dashboard run results."""

from datetime import datetime
from typing import Dict, List, Optional

import streamlit as st

from config.defaults import DEFAULT_K, DEFAULT_N, DEFAULT_SEED, DEFAULT_WBA_MODE
from models.reports import BenchReport, OpCountReport, RoundtripReport


def initialize_session_state():
    """Initialize all session state keys with defaults."""
    defaults = {
        "op_counts": {},
        "field_benches": {},
        "decoder_bench": None,
        "roundtrip": None,
        "run_log": [],
        "sidebar_state": {
            "n": DEFAULT_N,
            "k": DEFAULT_K,
            "tau": None,
            "seed": DEFAULT_SEED,
            "wba_mode": DEFAULT_WBA_MODE,
        },
    }
    for key, default in defaults.items():
        if key not in st.session_state:
            st.session_state[key] = default


# --- Getters ---

def get_op_counts() -> Dict[str, OpCountReport]:
    return st.session_state.get("op_counts", {})


def get_field_benches() -> Dict[str, BenchReport]:
    return st.session_state.get("field_benches", {})


def get_decoder_bench() -> Optional[BenchReport]:
    return st.session_state.get("decoder_bench")


def get_roundtrip() -> Optional[RoundtripReport]:
    return st.session_state.get("roundtrip")


def get_run_log() -> List[dict]:
    return st.session_state.get("run_log", [])


# --- Setters ---

def _log_run(kind: str, detail: str):
    st.session_state["run_log"].append({"time": datetime.now(), "run": kind, "detail": detail})


def set_op_counts(report: OpCountReport):
    st.session_state["op_counts"][report.decoder] = report
    _log_run("count-ops", f"{report.decoder}, {report.trials} decodes, seed {report.seed}")


def set_field_bench(report: BenchReport):
    st.session_state["field_benches"][report.label] = report
    _log_run("bench-field", f"{report.label}, {sum(report.calls.values())} calls")


def set_decoder_bench(report: BenchReport):
    st.session_state["decoder_bench"] = report
    _log_run("bench-decoders", f"{report.trials} decodes, seed {report.seed}")


def set_roundtrip(report: RoundtripReport):
    st.session_state["roundtrip"] = report
    _log_run("roundtrip", f"{report.trials} trials, tau {report.tau}, seed {report.seed}")


def clear_results():
    for key in ("op_counts", "field_benches"):
        st.session_state[key] = {}
    st.session_state["decoder_bench"] = None
    st.session_state["roundtrip"] = None
