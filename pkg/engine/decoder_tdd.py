"""Transform-domain decoder over the self-dual normal basis.

Received words and messages cross the public boundary in the polynomial basis;
everything in between runs on normal-basis coordinates.
"""

import logging
from typing import List, Optional, Sequence

from engine.basis_builder import load_default_ctx
from engine.errors import DecodeFailure, InternalConsistencyError
from engine.gabidulin import tdd_precompute
from engine.gf_normal import NormalBasisField, from_poly_int, to_poly_int
from engine.linearized import qp_add, qp_frobenius, qp_identity, qp_scale, q_transform
from models.code import GabidulinCode, TddPrecomp
from models.decoder_state import TddWork
from models.linpoly import LinPoly
from models.normal_basis import NormalBasisCtx

logger = logging.getLogger(__name__)


def tdd_syndromes(field: NormalBasisField, received: Sequence[int], pre: TddPrecomp, count: int) -> List[int]:
    """s_i = Σ_j r_j α^[i+j] for i < count, with r = A r'."""
    if not field.ctx.self_dual:
        raise InternalConsistencyError("syndromes through the q-transform need a self-dual basis")
    r = []
    for support in pre.a_rows:
        acc = field.zero
        for j in support:
            acc = field.add(acc, received[j])
        r.append(acc)
    return q_transform(field, r, rows=range(count))


def tdd_bma(field: NormalBasisField, syndromes: Sequence[int], tau_max: int) -> LinPoly:
    """Berlekamp-Massey on the key equation Σ_{i=0}^{τ} γ_i s_{j-i}^[i] = 0, j = τ..d-2.

    B is kept normalized so that its discrepancy is one; composing with x^[1]
    each round moves that discrepancy to the next index.
    """
    gamma = qp_identity(field)
    B = qp_identity(field)
    L = 0
    for n in range(len(syndromes)):
        delta = syndromes[n]
        for i in range(1, L + 1):
            g = gamma.coeff(i)
            if g:
                delta = field.add(delta, field.mul(g, field.qpow(syndromes[n - i], i)))
        B = qp_frobenius(field, B)
        if not delta:
            continue
        if 2 * L <= n:
            previous = gamma
            gamma = qp_add(field, gamma, qp_scale(field, delta, B))
            B = qp_scale(field, field.inv(delta), previous)
            L = n + 1 - L
            logger.debug("BMA length change at n=%d: L=%d", n, L)
        else:
            gamma = qp_add(field, gamma, qp_scale(field, delta, B))

    if L > tau_max:
        raise DecodeFailure(f"error span polynomial needs q-degree {L} > tau_max={tau_max}")
    return gamma


def tdd_residuals(field: NormalBasisField, gamma: LinPoly, syndromes: Sequence[int]) -> List[int]:
    """Key-equation values for j = τ..d-2; all zero for a valid error span polynomial."""
    tau = gamma.qdeg
    out = []
    for j in range(tau, len(syndromes)):
        acc = field.zero
        for i, g in enumerate(gamma.coeffs):
            if g:
                acc = field.add(acc, field.mul(g, field.qpow(syndromes[j - i], i)))
        out.append(acc)
    return out


def tdd_extend(field: NormalBasisField, gamma: LinPoly, syndromes: Sequence[int]) -> List[int]:
    """ẽ_j = Σ_{i=1}^{τ} γ_i ẽ_{j-i}^[i] for j = d-1..m-1, indices taken mod m."""
    m = field.degree
    tau = max(gamma.qdeg, 0)
    e_tilde = list(syndromes) + [field.zero] * (m - len(syndromes))
    tables = {i: field.make_shift_table(gamma.coeff(i)) for i in range(1, tau + 1) if gamma.coeff(i)}
    for j in range(len(syndromes), m):
        acc = field.zero
        for i, table in tables.items():
            prev = e_tilde[(j - i) % m]
            if prev:
                term = field.mul_shift_tables(table, field.make_shift_table(field.qpow(prev, i)))
                acc = field.add(acc, term)
        e_tilde[j] = acc
    return e_tilde


def tdd_recover(
    field: NormalBasisField,
    e_tilde: Sequence[int],
    pre: TddPrecomp,
    received: Sequence[int],
    work: Optional[TddWork] = None,
) -> List[int]:
    """e = q_transform(ẽ), e' = A† e, c' = r' + e', msg = c'_sub · G_sub^-1."""
    e = q_transform(field, e_tilde)
    e_prime = []
    for support in pre.adag_rows:
        acc = field.zero
        for t in support:
            acc = field.add(acc, e[t])
        e_prime.append(acc)
    corrected = [field.add(r, v) for r, v in zip(received, e_prime)]

    k = len(pre.gsub_inv)
    msg = []
    for i in range(k):
        acc = field.zero
        for j in range(k):
            if corrected[j] and pre.gsub_inv[j][i]:
                acc = field.add(acc, field.mul(corrected[j], pre.gsub_inv[j][i]))
        msg.append(acc)

    if work is not None:
        work.e = e
        work.e_prime = e_prime
        work.msg = msg
    return msg


def tdd_run(
    code: GabidulinCode,
    received: Sequence[int],
    ctx: Optional[NormalBasisCtx] = None,
    field: Optional[NormalBasisField] = None,
) -> TddWork:
    """Full decode keeping every intermediate; all entries in normal-basis coordinates."""
    if field is None:
        field = NormalBasisField(ctx or load_default_ctx())
    ctx = field.ctx
    if len(received) != code.n:
        raise ValueError(f"Received word must have n={code.n} elements, got {len(received)}")
    pre = tdd_precompute(code, ctx)
    r_normal = [from_poly_int(v, ctx) for v in received]

    work = TddWork()
    work.syndromes = tdd_syndromes(field, r_normal, pre, code.d - 1)
    work.gamma = tdd_bma(field, work.syndromes, code.tau_max)
    work.tau = max(work.gamma.qdeg, 0)
    work.e_tilde = tdd_extend(field, work.gamma, work.syndromes)
    tdd_recover(field, work.e_tilde, pre, r_normal, work)
    return work


def tdd_decode(
    code: GabidulinCode,
    received: Sequence[int],
    ctx: Optional[NormalBasisCtx] = None,
    field: Optional[NormalBasisField] = None,
) -> List[int]:
    """Decoded message in the polynomial basis."""
    work = tdd_run(code, received, ctx, field)
    ctx = field.ctx if field is not None else (ctx or load_default_ctx())
    return [to_poly_int(v, ctx) for v in work.msg]
