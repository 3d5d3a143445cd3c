"""Theoretical GF(2) operation counts of both decoders, evaluated exactly."""

from fractions import Fraction
from typing import Dict, List, Union

import pandas as pd

from config.defaults import COMPLEXITY_TOLERANCE, REFERENCE_COMPLEXITY_TOTALS
from models.reports import ComplexityParams

Number = Union[int, Fraction]

HALF = Fraction(1, 2)


def _exact(value: Number) -> Union[int, float]:
    value = Fraction(value)
    return int(value) if value.denominator == 1 else float(value)


def _row(step: str, additions: Number, multiplications: Number = 0) -> Dict:
    return {"step": step, "additions": _exact(additions), "multiplications": _exact(multiplications)}


def complexity_wba(p: ComplexityParams) -> List[Dict]:
    n, k, m, c_inv = p.n, p.k, p.m, p.c_inv
    m2 = m * m
    x = n * n - 2 * k * n - n + k * k + k
    return [
        _row(
            "Init A, I",
            m * (2 * k * k - 2 * k) + 2 * k * c_inv + (2 * k * k + k) * (m2 - 1)
            + Fraction(3 * k * k - k, 2) * (2 * m - 2),
            (2 * k * k + k) * m2,
        ),
        _row(
            "Init u",
            m * (2 * k - 1) * (n - k) + (2 * k + 1) * (n - k) * (m2 - 1) + (k - 1) * (n - k) * (2 * m - 2),
            (2 * k + 1) * (n - k) * m2,
        ),
        _row(
            "Update u",
            x * m + x * (m2 - 1) + Fraction(n * n - 2 * k * n + n + k * k - k, 2) * (2 * m - 2),
            m2 * x,
        ),
        _row(
            "Update polynomials",
            m * (n * n - k * n) + 2 * c_inv * (n - k) + (n * n - k * n + 2 * (n - k)) * (m2 - 1)
            + Fraction(k * k - 2 * n * k + 3 * k + n * n + 2 * n, 2) * (2 * m - 2),
            m2 * (n * n - k * n + 2 * (n - k)),
        ),
        _row(
            "Left division",
            Fraction((k - 1) * (n - k), 2) * m + Fraction((k - 1) * (n - k), 2) * (m2 - 1)
            + (n - k) * (k - 1) * (2 * m - 2),
            m2 * Fraction((k - 1) * (n - k), 2),
        ),
        _row("Compute m", (k + 1) * m),
    ]


def complexity_tdd(p: ComplexityParams) -> List[Dict]:
    """BMA additions read as m(d-1)(½(C_inv + d - 2)(C_M - 1) + ½(d - 2))."""
    n, k, m, d, c_m, c_inv = p.n, p.k, p.m, p.d, p.c_m, p.c_inv
    tau = p.tau_eff
    m2 = m * m
    extend_additions = (tau * (c_m - 1) + tau - 1) * m * (m - d + 1) if tau else 0
    return [
        _row("Code transform", (n - 1) * m2, n * m2),
        _row("Syndromes", (n * (c_m - m) + (n - 1) * m) * (d - 1)),
        _row(
            "BMA",
            m * (d - 1) * (HALF * (c_inv + d - 2) * (c_m - 1) + HALF * (d - 2)),
            m2 * (d - 1) * (d - 2 + HALF * c_inv),
        ),
        _row("Compute ẽ", extend_additions, m2 * (m - d + 1) * tau),
        _row("Inverse q-transform", n * m * c_m),
        _row("A† multiplication", (n - 1) * n * m, n * n * m),
        _row("Compute m'", m * (k * (k - 1) + (c_m - 1) * k * k), m2 * k * k),
    ]


def complexity_totals(rows: List[Dict]) -> Dict[str, Union[int, float]]:
    return {
        "additions": sum(r["additions"] for r in rows),
        "multiplications": sum(r["multiplications"] for r in rows),
    }


def complexity_frame(rows: List[Dict]) -> pd.DataFrame:
    df = pd.DataFrame(rows)
    totals = complexity_totals(rows)
    df = pd.concat([df, pd.DataFrame([{"step": "Total", **totals}])], ignore_index=True)
    return df.rename(columns={"step": "Step", "additions": "Additions", "multiplications": "Multiplications"})


def complexity_report(params: ComplexityParams) -> Dict[str, pd.DataFrame]:
    """Per-decoder step tables plus a summary with published totals and relative deviation."""
    rows = {"wba": complexity_wba(params), "tdd": complexity_tdd(params)}
    summary = []
    for decoder, decoder_rows in rows.items():
        totals = complexity_totals(decoder_rows)
        reference = REFERENCE_COMPLEXITY_TOTALS[decoder]
        for kind in ("additions", "multiplications"):
            dev = (totals[kind] - reference[kind]) / reference[kind]
            summary.append({
                "Decoder": decoder.upper(),
                "Operation": kind,
                "Computed": totals[kind],
                "Published": reference[kind],
                "Deviation (%)": round(100 * dev, 2),
                "Within tolerance": abs(dev) <= COMPLEXITY_TOLERANCE[decoder],
            })
    return {
        "wba": complexity_frame(rows["wba"]),
        "tdd": complexity_frame(rows["tdd"]),
        "summary": pd.DataFrame(summary),
    }
