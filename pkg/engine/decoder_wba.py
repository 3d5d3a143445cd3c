"""Welch-Berlekamp interpolation decoder over the polynomial basis.

Two modes:
  - constant-time: exactly n - k nominal iterations; when every remaining
    discrepancy of the second pair vanishes, that pair is kept as the result
    and seeded random values let the loop continue.
  - early-exit: pivoting with dummy steps and termination as soon as the
    second pair interpolates every remaining point.
"""

import logging
from typing import List, Optional, Sequence

import numpy as np

from config.defaults import DEFAULT_WBA_MODE, WBA_MODES
from engine.errors import DecodeFailure, ZeroDivisorError
from engine.gf_poly import PolyBasisField
from engine.linearized import (
    FieldBackend,
    annihilator_poly,
    interpolation_poly,
    qp_add,
    qp_compose,
    qp_eval,
    qp_frobenius,
    qp_identity,
    qp_left_divide,
    qp_scale,
    qp_zero,
)
from models.code import GabidulinCode
from models.decoder_state import WbaState
from models.field_element import MASK127

logger = logging.getLogger(__name__)


def wba_init(code: GabidulinCode, received: Sequence[int], field: Optional[FieldBackend] = None) -> WbaState:
    """Annihilator and interpolator of the first k positions, pairs (x, 0) and (0, x), discrepancies."""
    field = field or PolyBasisField()
    n, k = code.n, code.k
    if len(received) != n:
        raise ValueError(f"Received word must have n={n} elements, got {len(received)}")

    annihilator = annihilator_poly(field, code.g[:k])
    interpolator = interpolation_poly(field, code.g[:k], received[:k])

    u0 = [field.zero] * n
    u1 = [field.zero] * n
    for i in range(k, n):
        u0[i] = qp_eval(field, annihilator, code.g[i])
        u1[i] = field.add(qp_eval(field, interpolator, code.g[i]), received[i])

    return WbaState(
        p0=qp_identity(field),
        q0=qp_zero(field),
        p1=qp_zero(field),
        q1=qp_identity(field),
        u0=u0,
        u1=u1,
        annihilator=annihilator,
        interpolator=interpolator,
        n=n,
        k=k,
        l=k,
    )


def _nominal_step(field: FieldBackend, state: WbaState, l: int):
    u0, u1 = state.u0, state.u1
    u1l = u1[l]
    ratio = field.mul(u0[l], field.inv(u1l))

    p1 = qp_add(field, qp_frobenius(field, state.p1), qp_scale(field, u1l, state.p1))
    q1 = qp_add(field, qp_frobenius(field, state.q1), qp_scale(field, u1l, state.q1))
    p0 = qp_add(field, state.p0, qp_scale(field, ratio, state.p1))
    q0 = qp_add(field, state.q0, qp_scale(field, ratio, state.q1))
    state.p0, state.q0, state.p1, state.q1 = p1, q1, p0, q0

    new_u0 = list(u0)
    new_u1 = list(u1)
    for i in range(l + 1, state.n):
        a = u1[i]
        new_u0[i] = field.add(field.square(a), field.mul(u1l, a))
        new_u1[i] = field.add(u0[i], field.mul(ratio, a))
    new_u0[l] = new_u1[l] = field.zero
    state.u0, state.u1 = new_u0, new_u1


def _dummy_step(field: FieldBackend, state: WbaState, l: int):
    p0, q0 = qp_frobenius(field, state.p1), qp_frobenius(field, state.q1)
    state.p1, state.q1 = state.p0, state.q0
    state.p0, state.q0 = p0, q0

    new_u0 = list(state.u0)
    new_u1 = list(state.u1)
    for i in range(l + 1, state.n):
        new_u0[i] = field.square(state.u1[i])
        new_u1[i] = state.u0[i]
    new_u0[l] = new_u1[l] = field.zero
    state.u0, state.u1 = new_u0, new_u1


def _swap(values: List[int], i: int, j: int):
    values[i], values[j] = values[j], values[i]


def _masked_pivot(field: FieldBackend, state: WbaState, l: int):
    """Bring the first nonzero u1_d (d > l) to position l unless u1_l is already nonzero.

    Every candidate d costs the same four masked exchanges.
    """
    u0, u1 = state.u0, state.u1
    for d in range(l + 1, state.n):
        mask = MASK127 if (not u1[l] and u1[d]) else 0
        t1 = (u1[l] ^ u1[d]) & mask
        t0 = (u0[l] ^ u0[d]) & mask
        u1[l] = field.add(u1[l], t1)
        u1[d] = field.add(u1[d], t1)
        u0[l] = field.add(u0[l], t0)
        u0[d] = field.add(u0[d], t0)


def _early_exit_iteration(field: FieldBackend, state: WbaState, l: int) -> bool:
    """One pivoted step; False when no pivot is left and the loop terminates."""
    u0, u1 = state.u0, state.u1
    pivot = next((d for d in range(l, state.n) if u1[d] or not u0[d]), None)
    if pivot is None:
        logger.debug("early exit at l=%d: all remaining discrepancies of pair 1 vanish", l)
        return False
    if pivot != l:
        _swap(u0, l, pivot)
        _swap(u1, l, pivot)
    if u1[l]:
        _nominal_step(field, state, l)
    else:
        logger.debug("dummy step at l=%d (pivot %d)", l, pivot)
        _dummy_step(field, state, l)
    return True


def _constant_time_iteration(field: FieldBackend, state: WbaState, l: int, rng: np.random.Generator):
    _masked_pivot(field, state, l)
    if not state.u1[l]:
        if state.latched is None:
            logger.debug("pair 1 interpolates every remaining point at l=%d; latched", l)
            state.latched = (state.p1, state.q1)
        state.u1[l] = field.random_nonzero(rng)
        state.substitutions += 1
    _nominal_step(field, state, l)


def wba_interpolate(
    state: WbaState,
    mode: str = DEFAULT_WBA_MODE,
    seed: Optional[int] = None,
    field: Optional[FieldBackend] = None,
) -> WbaState:
    if mode not in WBA_MODES:
        raise ValueError(f"Unknown WBA mode {mode!r}; choose from {', '.join(WBA_MODES)}")
    field = field or PolyBasisField()
    rng = np.random.default_rng(seed)
    state.mode = mode

    for l in range(state.k, state.n):
        state.l = l
        if mode == "early-exit":
            if not _early_exit_iteration(field, state, l):
                break
        else:
            _constant_time_iteration(field, state, l, rng)
        state.iterations += 1
    state.finished = True
    return state


def wba_finalize(state: WbaState, field: Optional[FieldBackend] = None) -> List[int]:
    """F = Q1 \\ (P1 ∘ A) + I; the k coefficients of F are the message."""
    field = field or PolyBasisField()
    p1, q1 = state.latched if state.latched is not None else (state.p1, state.q1)
    if q1.is_zero():
        raise DecodeFailure("interpolation ended with Q1 = 0")

    numerator = qp_compose(field, p1, state.annihilator)
    try:
        quotient, _ = qp_left_divide(field, numerator, q1, wanted=state.k)
    except ZeroDivisorError as exc:
        raise DecodeFailure(str(exc)) from exc
    if quotient.qdeg >= state.k:
        raise DecodeFailure(f"quotient has q-degree {quotient.qdeg} >= k={state.k}: error rank beyond radius")
    F = qp_add(field, quotient, state.interpolator)
    return [F.coeff(i) for i in range(state.k)]


def wba_decode(
    code: GabidulinCode,
    received: Sequence[int],
    mode: str = DEFAULT_WBA_MODE,
    seed: Optional[int] = None,
    field: Optional[FieldBackend] = None,
) -> List[int]:
    field = field or PolyBasisField()
    state = wba_init(code, received, field)
    wba_interpolate(state, mode, seed, field)
    return wba_finalize(state, field)
