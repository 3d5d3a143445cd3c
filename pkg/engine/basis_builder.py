"""Construction and verification of a low-complexity self-dual normal basis.

Gauss periods of type t (p = 127·t + 1 prime, <2> · K = Z_p^*) give the
multiplication table combinatorially. The normal element is then located in the
polynomial basis as a root of its minimal polynomial and every claim about the
basis is re-checked with polynomial-basis arithmetic, which is the ground truth.
"""

import logging
from functools import lru_cache
from math import gcd
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from config.defaults import (
    BASIS_CANDIDATE_BUDGET,
    BASIS_SEARCH_SEED,
    BASIS_VERIFY_PAIRS,
    FIELD_DEGREE,
    GAUSS_PERIOD_MAX_TYPE,
    MAX_BASIS_COMPLEXITY,
)
from engine import gf2_linalg
from engine.errors import BasisSearchExhausted, InternalConsistencyError
from engine.gf_normal import from_poly_int, mul_int as nb_mul_int, to_poly_int
from engine.gf_poly import inv_int, mul_int, random_nonzero_int, square_int, trace_int
from models.normal_basis import NormalBasisCtx

logger = logging.getLogger(__name__)

M = FIELD_DEGREE


# --- Gauss periods ---

def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def _multiplicative_order(a: int, p: int) -> int:
    order, x = 1, a % p
    while x != 1:
        x = x * a % p
        order += 1
    return order


def gauss_period_types(m: int = M, max_type: int = GAUSS_PERIOD_MAX_TYPE) -> List[int]:
    """Admissible types, even ones first (they yield self-dual bases)."""
    found = []
    for t in range(1, max_type + 1):
        p = m * t + 1
        if not _is_prime(p):
            continue
        if gcd(m * t // _multiplicative_order(2, p), m) == 1:
            found.append(t)
    return sorted(found, key=lambda t: (t % 2, t))


def gauss_period_table(t: int, m: int = M) -> List[int]:
    """Rows of M as bit masks: bit j of row i is set iff α^[j] occurs in α·α^[i]."""
    p = m * t + 1
    subgroup = [x for x in range(1, p) if pow(x, t, p) == 1]
    coset: Dict[int, int] = {}
    for j in range(m):
        two_j = pow(2, j, p)
        for kappa in subgroup:
            coset[kappa * two_j % p] = j
    all_ones = (1 << m) - 1
    rows = []
    for i in range(m):
        row = 0
        two_i = pow(2, i, p)
        for c in subgroup:
            y = (1 + c * two_i) % p
            if y == 0:
                # a sum of t ones; only odd types contribute the unit
                if t % 2:
                    row ^= all_ones
            else:
                row ^= 1 << coset[y]
        rows.append(row)
    return rows


# --- minimal polynomial of α, computed with normal-basis coordinates ---

def _alpha_times(v: int, col_masks: Sequence[int]) -> int:
    out = 0
    for j, mask in enumerate(col_masks):
        if (v & mask).bit_count() & 1:
            out |= 1 << j
    return out


def _col_masks(rows: Sequence[int], m: int = M) -> Tuple[int, ...]:
    cols = [0] * m
    for i, row in enumerate(rows):
        for j in range(m):
            if (row >> j) & 1:
                cols[j] |= 1 << i
    return tuple(cols)


def minimal_polynomial(rows: Sequence[int], m: int = M) -> List[int]:
    """GF(2) coefficients (low degree first) of the minimal polynomial of α = e_0."""
    col_masks = _col_masks(rows, m)
    powers = [1]  # α^1
    for _ in range(m):
        powers.append(_alpha_times(powers[-1], col_masks))
    basis = gf2_linalg.elements_to_matrix(powers[:m], m).T   # columns α^1..α^m
    target = gf2_linalg.int_to_bits(powers[m], m)            # α^(m+1)
    c = gf2_linalg.solve(basis, target)
    # α^(m+1) = Σ c_i α^(i+1)  =>  f(x) = x^m + Σ c_i x^i
    return [int(b) for b in c] + [1]


# --- root finding over GF(2^127) in the polynomial basis ---

def _trim(p: List[int]) -> List[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _monic(p: List[int]) -> List[int]:
    lead = p[-1]
    if lead == 1:
        return list(p)
    inv = inv_int(lead)
    return [mul_int(c, inv) if c else 0 for c in p]


def _mod_monic(p: List[int], g: List[int]) -> List[int]:
    p = list(p)
    dg = len(g) - 1
    for d in range(len(p) - 1, dg - 1, -1):
        c = p[d]
        if not c:
            continue
        base = d - dg
        for t in range(dg):
            if g[t]:
                p[base + t] ^= c if g[t] == 1 else mul_int(c, g[t])
        p[d] = 0
    return _trim(p[:dg])


def _gcd(a: List[int], b: List[int]) -> List[int]:
    a = _monic(_trim(list(a)))
    b = _trim(list(b))
    while b:
        b = _monic(b)
        a, b = b, _mod_monic(a, b)
    return a


def _divide_monic(p: List[int], g: List[int]) -> List[int]:
    rem = list(p)
    dg = len(g) - 1
    quot = [0] * (len(p) - dg)
    for d in range(len(p) - 1, dg - 1, -1):
        c = rem[d]
        if not c:
            continue
        quot[d - dg] = c
        for t in range(dg + 1):
            if g[t]:
                rem[d - dg + t] ^= c if g[t] == 1 else mul_int(c, g[t])
    return _trim(quot)


def _trace_poly_mod(beta: int, f_low: Sequence[int], deg: int) -> List[int]:
    """Σ_{i<deg} (βY)^(2^i) mod f, for a binary monic f with low terms f_low."""
    w = [0] * deg
    w[1] = beta
    acc = list(w)
    for _ in range(deg - 1):
        sq = [0] * (2 * deg - 1)
        for i, c in enumerate(w):
            if c:
                sq[2 * i] = square_int(c)
        for d in range(2 * deg - 2, deg - 1, -1):
            c = sq[d]
            if c:
                base = d - deg
                for t in f_low:
                    sq[base + t] ^= c
        w = sq[:deg]
        for i, c in enumerate(w):
            acc[i] ^= c
    return _trim(acc)


def find_root(f_bits: Sequence[int], rng: np.random.Generator) -> int:
    """A root in GF(2^127) of a binary polynomial that splits into distinct linear factors."""
    deg = len(f_bits) - 1
    f = [int(b) for b in f_bits]
    f_low = [t for t in range(deg) if f[t]]
    current = f
    while len(current) > 2:
        beta = random_nonzero_int(rng)
        h = _trace_poly_mod(beta, f_low, deg)
        if len(current) - 1 < deg:
            h = _mod_monic(h, current)
        factor = _gcd(current, h)
        fdeg = len(factor) - 1
        cdeg = len(current) - 1
        if fdeg == 0 or fdeg == cdeg:
            continue
        if 2 * fdeg > cdeg:
            factor = _monic(_divide_monic(current, factor))
        logger.debug("root search split degree %d into %d", cdeg, len(factor) - 1)
        current = factor
    # monic linear factor Y + c
    return current[0]


# --- verification in the polynomial basis ---

def _conjugates(alpha: int, m: int = M) -> List[int]:
    conj = [alpha]
    for _ in range(m - 1):
        conj.append(square_int(conj[-1]))
    return conj


def _apply_rows(rows: Sequence[int], v: int) -> int:
    out = 0
    for j, mask in enumerate(rows):
        if (v & mask).bit_count() & 1:
            out |= 1 << j
    return out


def ctx_from_alpha(
    alpha: int,
    expected_rows: Optional[Sequence[int]] = None,
    checksum: str = "",
    m: int = M,
) -> NormalBasisCtx:
    """Derive and verify the full context of the normal basis generated by α.

    Raises InternalConsistencyError when α is not normal or when the derived
    multiplication table differs from ``expected_rows``.
    """
    conj = _conjugates(alpha, m)
    to_poly = gf2_linalg.elements_to_matrix(conj, m).T   # column j = α^[j]
    if gf2_linalg.rank(to_poly) != m:
        raise InternalConsistencyError("element is not normal: its q-powers are linearly dependent")
    from_poly = gf2_linalg.inverse(to_poly)
    to_rows = tuple(gf2_linalg.bits_to_int(to_poly[t]) for t in range(m))
    from_rows = tuple(gf2_linalg.bits_to_int(from_poly[j]) for j in range(m))

    rows = [_apply_rows(from_rows, mul_int(alpha, conj[s])) for s in range(m)]
    if expected_rows is not None and list(expected_rows) != rows:
        raise InternalConsistencyError("multiplication table derived from α disagrees with the expected table")

    entries = tuple((i, j) for i in range(m) for j in range(m) if (rows[i] >> j) & 1)
    self_dual = all(trace_int(mul_int(alpha, conj[d])) == (1 if d == 0 else 0) for d in range(m))

    cols = _col_masks(rows, m)
    pattern = tuple(
        tuple((i + r) % m for i in range(m) if (cols[(-r) % m] >> i) & 1)
        for r in range(m)
    )
    return NormalBasisCtx(
        m=m,
        entries=entries,
        complexity=len(entries),
        alpha_poly=alpha,
        self_dual=self_dual,
        conjugates=tuple(conj),
        to_poly_rows=to_rows,
        from_poly_rows=from_rows,
        col_masks=cols,
        table_pattern=pattern,
        checksum=checksum,
    )


def verify_products(ctx: NormalBasisCtx, pairs: int = BASIS_VERIFY_PAIRS, seed: int = 0) -> bool:
    """Cross-basis check of the table product against polynomial multiplication."""
    rng = np.random.default_rng(seed)
    for _ in range(pairs):
        a = random_nonzero_int(rng)
        b = random_nonzero_int(rng)
        if to_poly_int(nb_mul_int(a, b, ctx), ctx) != mul_int(to_poly_int(a, ctx), to_poly_int(b, ctx)):
            return False
    return from_poly_int(1, ctx) == (1 << ctx.m) - 1


def _gauss_candidates(rng: np.random.Generator, max_type: int) -> Iterator[NormalBasisCtx]:
    for t in gauss_period_types(M, max_type):
        rows = gauss_period_table(t)
        f_bits = minimal_polynomial(rows)
        alpha = find_root(f_bits, rng)
        logger.info("Gauss period type %d: α located in the polynomial basis", t)
        yield ctx_from_alpha(alpha, expected_rows=rows)


def _random_candidates(rng: np.random.Generator, budget: int) -> Iterator[NormalBasisCtx]:
    for _ in range(budget):
        try:
            yield ctx_from_alpha(random_nonzero_int(rng))
        except InternalConsistencyError:
            continue


def build_normal_basis(search_seed: int = BASIS_SEARCH_SEED, config: Optional[dict] = None) -> NormalBasisCtx:
    """Search, verify and return a self-dual normal basis of GF(2^127).

    Gauss period candidates are tried first; seeded random elements follow until
    the candidate budget runs out. Only self-dual bases with C_M at most
    ``max_complexity`` are accepted. Random normal elements almost never give
    one, so the fallback mostly ends in BasisSearchExhausted.
    """
    cfg = config or {}
    max_type = cfg.get("gauss_period_max_type", GAUSS_PERIOD_MAX_TYPE)
    budget = cfg.get("candidate_budget", BASIS_CANDIDATE_BUDGET)
    verify_pairs = cfg.get("verify_pairs", BASIS_VERIFY_PAIRS)
    max_complexity = cfg.get("max_complexity", MAX_BASIS_COMPLEXITY)

    def acceptable(ctx: NormalBasisCtx) -> bool:
        return ctx.self_dual and ctx.complexity <= max_complexity

    rng = np.random.default_rng(search_seed)
    for ctx in _gauss_candidates(rng, max_type):
        if not acceptable(ctx):
            logger.info("Gauss period basis (C_M=%d, self-dual=%s) rejected", ctx.complexity, ctx.self_dual)
            continue
        if not verify_products(ctx, verify_pairs, seed=search_seed):
            raise InternalConsistencyError("table multiplication disagrees with polynomial multiplication")
        logger.info("normal basis found: C_M=%d, self-dual", ctx.complexity)
        return ctx

    best: Optional[NormalBasisCtx] = None
    for ctx in _random_candidates(rng, budget):
        if acceptable(ctx) and (best is None or ctx.complexity < best.complexity):
            best = ctx
    if best is None:
        raise BasisSearchExhausted(budget, max_type, max_complexity)
    if not verify_products(best, verify_pairs, seed=search_seed):
        raise InternalConsistencyError("table multiplication disagrees with polynomial multiplication")
    return best


def resolve_ctx(path: Path) -> NormalBasisCtx:
    """Read the ctx file at ``path``, or build the basis in memory when there is none.

    A damaged file raises CtxFileError. Nothing is written; ``cli.py basis-info
    --write-ctx`` stores a built basis.
    """
    from data import ctx_store

    if path.exists():
        return ctx_store.load_ctx(path)
    logger.warning("no normal basis file at %s; building the basis in memory", path)
    return build_normal_basis()


@lru_cache(maxsize=None)
def load_default_ctx() -> NormalBasisCtx:
    """The repository's normal basis, from data/normal_basis_127.ctx."""
    from data import ctx_store

    return resolve_ctx(ctx_store.default_ctx_path())


def basis_info(ctx: NormalBasisCtx) -> Dict[str, object]:
    return {
        "m": ctx.m,
        "complexity": ctx.complexity,
        "self_dual": ctx.self_dual,
        "alpha": f"{ctx.alpha_poly:032x}",
        "row_weight_histogram": ctx.row_weight_histogram(),
        "checksum": ctx.checksum,
    }
