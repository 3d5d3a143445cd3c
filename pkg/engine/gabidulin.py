"""Gabidulin codes over GF(2^127): construction, encoding, dual support and TDD precomputation.

Code elements (g, h, messages, codewords) are packed polynomial-basis ints.
"""

import logging
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from config.defaults import CODE_GEN_MAX_ATTEMPTS, FIELD_DEGREE, RANDOM_SUPPORT_MAX_DRAWS
from data.validator import validate_code_params
from engine import gf2_linalg
from engine.errors import InternalConsistencyError
from engine.gf_normal import NormalBasisField, from_poly_int
from engine.gf_poly import PolyBasisField, random_int, reduce_int, trace_int
from engine.linearized import FieldBackend, qp_eval
from models.code import GabidulinCode, TddPrecomp
from models.linpoly import LinPoly
from models.normal_basis import NormalBasisCtx

logger = logging.getLogger(__name__)

M = FIELD_DEGREE
POLY = PolyBasisField()

SeedLike = Union[int, np.random.Generator, None]


# --- matrices over GF(2^127) ---

def moore_matrix(field: FieldBackend, points: Sequence[int], rows: int, start: int = 0) -> List[List[int]]:
    """Row i holds points_j^[start + i]."""
    current = [field.qpow(p, start % M) if start % M else p for p in points]
    out = []
    for i in range(rows):
        if i:
            current = [field.square(p) for p in current]
        out.append(list(current))
    return out


def _row_reduce(field: FieldBackend, matrix: List[List[int]], n_pivot_cols: int) -> Tuple[List[List[int]], List[int]]:
    """Gauss-Jordan elimination with unit pivots over the first ``n_pivot_cols`` columns."""
    R = [list(row) for row in matrix]
    pivots: List[int] = []
    r = 0
    for col in range(n_pivot_cols):
        found = next((i for i in range(r, len(R)) if R[i][col]), None)
        if found is None:
            continue
        R[r], R[found] = R[found], R[r]
        inv = field.inv(R[r][col])
        R[r] = [field.mul(inv, x) if x else 0 for x in R[r]]
        for i in range(len(R)):
            f = R[i][col]
            if i != r and f:
                R[i] = [field.add(x, field.mul(f, y)) if y else x for x, y in zip(R[i], R[r])]
        pivots.append(col)
        r += 1
        if r == len(R):
            break
    return R, pivots


def kernel_vector(field: FieldBackend, matrix: List[List[int]], ncols: int) -> List[int]:
    """A nonzero x with matrix · x = 0; raises InternalConsistencyError for full column rank."""
    R, pivots = _row_reduce(field, matrix, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    if not free:
        raise InternalConsistencyError("homogeneous system has only the trivial solution")
    f = free[0]
    x = [0] * ncols
    x[f] = field.one
    for row, p in zip(R, pivots):
        x[p] = row[f]
    return x


def field_inverse(field: FieldBackend, matrix: List[List[int]]) -> List[List[int]]:
    size = len(matrix)
    identity = [[field.one if i == j else 0 for j in range(size)] for i in range(size)]
    aug = [list(row) + ident for row, ident in zip(matrix, identity)]
    R, pivots = _row_reduce(field, aug, size)
    if len(pivots) != size:
        raise InternalConsistencyError(f"{size}x{size} Moore submatrix is singular")
    return [row[size:] for row in R]


# --- code construction ---

def rank_of(values: Sequence[int], m: int = M) -> int:
    """GF(2)-rank of the coordinate matrix of ``values``."""
    return gf2_linalg.rank(gf2_linalg.elements_to_matrix(list(values), m))


def _random_independent(rng: np.random.Generator, count: int, max_draws: int) -> List[int]:
    for _ in range(max_draws):
        values = [random_int(rng) for _ in range(count)]
        if rank_of(values) == count:
            return values
    raise InternalConsistencyError(f"no {count} GF(2)-independent elements after {max_draws} draws")


@lru_cache(maxsize=None)
def trace_form() -> np.ndarray:
    """T_{t,u} = Tr(x^(t+u)); treat as read-only."""
    return np.array([[trace_int(reduce_int(1 << (t + u))) for u in range(M)] for t in range(M)], dtype=np.uint8)


def _dual_basis(basis: Sequence[int]) -> List[int]:
    """b*_j with Tr(b_i · b*_j) = δ_ij."""
    T = trace_form()
    B = gf2_linalg.elements_to_matrix(list(basis), M)
    Z = gf2_linalg.inverse(gf2_linalg.matmul(B, T))
    return [gf2_linalg.bits_to_int(Z[:, j]) for j in range(M)]


def _moore_kernel_direct(g: Sequence[int]) -> List[int]:
    n = len(g)
    return kernel_vector(POLY, moore_matrix(POLY, g, n - 1), n)


def _moore_kernel_dual_basis(g: Sequence[int]) -> List[int]:
    """Kernel of the (n-1) x n Moore system through a dual basis.

    With y_i = Σ_l (b*_i)^[l] Y_l one has Σ_i y_i b_i^[s] = Y_s, so the system
    reduces to m - n equations in the m - n + 1 unknowns Y_{n-1}, ..., Y_{m-1}.
    """
    n = len(g)
    stacked = np.concatenate([gf2_linalg.elements_to_matrix(list(g), M), np.eye(M, dtype=np.uint8)])
    chosen = gf2_linalg.independent_rows(stacked)
    basis = list(g) + [1 << (r - n) for r in chosen[n:]]
    dual = _dual_basis(basis)

    # conj[i][l - (n-1)] = (b*_i)^[l] for l = n-1..m-1
    conj = [list(col) for col in zip(*moore_matrix(POLY, dual, M - n + 1, start=n - 1))]
    Y = kernel_vector(POLY, [conj[j] for j in range(n, M)], M - n + 1)
    y = []
    for i in range(n):
        acc = 0
        for c, yl in zip(conj[i], Y):
            if c and yl:
                acc ^= POLY.mul(c, yl)
        y.append(acc)
    return y


def dual_support(code: GabidulinCode, solver: str = "auto") -> GabidulinCode:
    """Set code.h so that Σ_j h_j g_j^[l] = 0 for l = -(n-k-1), ..., k-1."""
    n, k = code.n, code.k
    if solver == "auto":
        solver = "direct" if n <= M - n + 1 else "dual-basis"
    if solver == "direct":
        y = _moore_kernel_direct(code.g)
    elif solver == "dual-basis":
        y = _moore_kernel_dual_basis(code.g)
    else:
        raise ValueError(f"Unknown dual support solver {solver!r}")

    shift = (M - (n - k - 1)) % M
    h = tuple(POLY.qpow(v, shift) if shift else v for v in y)
    if rank_of(h) != n:
        raise InternalConsistencyError(f"dual support has GF(2)-rank {rank_of(h)} < {n}")
    code.h = h
    code.cache.clear()
    logger.debug("dual support found with the %s solver", solver)
    return code


def gen_code(n: int, k: int, seed: SeedLike = None, config: Optional[dict] = None) -> GabidulinCode:
    """Random Gabidulin code with GF(2)-independent g and its dual support h."""
    validate_code_params(n, k).raise_if_invalid()
    cfg = config or {}
    attempts = cfg.get("max_attempts", CODE_GEN_MAX_ATTEMPTS)
    draws = cfg.get("max_draws", RANDOM_SUPPORT_MAX_DRAWS)
    solver = cfg.get("solver", "auto")

    rng = np.random.default_rng(seed)
    for attempt in range(attempts):
        g = _random_independent(rng, n, draws)
        code = GabidulinCode(n=n, k=k, g=tuple(g), m=M, seed=seed if isinstance(seed, int) else None)
        try:
            return dual_support(code, solver)
        except InternalConsistencyError as exc:
            logger.debug("code attempt %d rejected: %s", attempt, exc)
    raise InternalConsistencyError(f"no valid ({n}, {k}) code after {attempts} attempts")


def encode(code: GabidulinCode, msg: Sequence[int]) -> List[int]:
    """c_j = Σ_i msg_i · g_j^[i]."""
    if len(msg) != code.k:
        raise ValueError(f"Message must have k={code.k} elements, got {len(msg)}")
    f = LinPoly(tuple(msg), POLY.name)
    return [qp_eval(POLY, f, g) for g in code.g]


def check_parity(code: GabidulinCode) -> List[List[int]]:
    """Entries of H'·G^T, (n-k) x k; all zero for a valid code."""
    if len(code.h) != code.n:
        raise ValueError("Code has no dual support; call dual_support first")
    H = moore_matrix(POLY, code.h, code.n - code.k)
    G = moore_matrix(POLY, code.g, code.k)
    out = []
    for h_row in H:
        entries = []
        for g_row in G:
            acc = 0
            for a, b in zip(h_row, g_row):
                acc ^= POLY.mul(a, b)
            entries.append(acc)
        out.append(entries)
    return out


def sample_error(n: int, tau: int, seed: SeedLike = None, config: Optional[dict] = None) -> List[int]:
    """Error of rank exactly tau: e = a · B with independent a_t and a full-rank tau x n GF(2) matrix B."""
    if not 0 <= tau <= min(n, M):
        raise ValueError(f"Error rank must lie in [0, {min(n, M)}], got {tau}")
    if tau == 0:
        return [0] * n
    cfg = config or {}
    draws = cfg.get("max_draws", RANDOM_SUPPORT_MAX_DRAWS)
    rng = np.random.default_rng(seed)
    a = _random_independent(rng, tau, draws)
    for _ in range(draws):
        B = rng.integers(0, 2, size=(tau, n), dtype=np.uint8)
        if gf2_linalg.rank(B) == tau:
            break
    else:
        raise InternalConsistencyError(f"no full-rank {tau}x{n} GF(2) matrix after {draws} draws")
    error = []
    for j in range(n):
        acc = 0
        for t in np.flatnonzero(B[:, j]):
            acc ^= a[int(t)]
        error.append(acc)
    return error


# --- transform-domain decoder precomputation ---

def tdd_precompute(code: GabidulinCode, ctx: NormalBasisCtx) -> TddPrecomp:
    """A (m x n, column j = normal coordinates of h_j), a left inverse of A and the inverse Moore submatrix.

    Cached on the code per basis checksum.
    """
    key = f"tdd:{ctx.checksum or id(ctx)}"
    if key in code.cache:
        return code.cache[key]
    if len(code.h) != code.n:
        raise ValueError("Code has no dual support; call dual_support first")

    field = NormalBasisField(ctx)
    A = gf2_linalg.elements_to_matrix([from_poly_int(h, ctx) for h in code.h], M).T.copy()
    try:
        Adag = gf2_linalg.left_inverse(A)
    except ValueError as exc:
        raise InternalConsistencyError(str(exc)) from exc

    g_sub = [from_poly_int(g, ctx) for g in code.g[:code.k]]
    gsub = moore_matrix(field, g_sub, code.k)
    gsub_inv = field_inverse(field, gsub)

    pre = TddPrecomp(
        A=A,
        Adag=Adag,
        gsub_inv=tuple(tuple(row) for row in gsub_inv),
        a_rows=gf2_linalg.row_supports(A),
        adag_rows=gf2_linalg.row_supports(Adag),
    )
    code.cache[key] = pre
    return pre
