"""Styled dataframe display helpers."""

from typing import Optional

import pandas as pd
import streamlit as st


def render_styled_table(
    df: pd.DataFrame,
    title: Optional[str] = None,
    height: Optional[int] = None,
    use_container_width: bool = True,
):
    """Render a styled, non-editable dataframe."""
    if title:
        st.subheader(title)
    st.dataframe(df, height=height, use_container_width=use_container_width, hide_index=True)


def render_deviation_table(df: pd.DataFrame, column: str = "Deviation (%)", tolerance_pct: float = 15.0):
    """Highlight deviations from published values beyond the tolerance."""
    def color_dev(val):
        try:
            v = abs(float(val))
        except (ValueError, TypeError):
            return ""
        if v > tolerance_pct:
            return "background-color: #ffcccc; color: #cc0000; font-weight: bold"
        return "color: #155724"

    if column in df.columns:
        st.dataframe(df.style.map(color_dev, subset=[column]), use_container_width=True, hide_index=True)
    else:
        st.dataframe(df, use_container_width=True, hide_index=True)


def render_tolerance_table(df: pd.DataFrame, column: str = "Within tolerance"):
    def color_flag(val):
        if val is True:
            return "background-color: #d4edda; color: #155724; font-weight: bold"
        if val is False:
            return "background-color: #fff3cd; color: #856404; font-weight: bold"
        return ""

    if column in df.columns:
        st.dataframe(df.style.map(color_flag, subset=[column]), use_container_width=True, hide_index=True)
    else:
        st.dataframe(df, use_container_width=True, hide_index=True)
