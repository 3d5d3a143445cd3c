"""Linearized (q-) polynomials over GF(2^127) for either field backend."""

from typing import Iterable, List, Optional, Sequence, Tuple, Union

from engine.errors import BasisMismatchError, DependentPointsError, ZeroDivisorError
from engine.gf_normal import NormalBasisField
from engine.gf_poly import PolyBasisField
from models.linpoly import LinPoly

FieldBackend = Union[PolyBasisField, NormalBasisField]


def _check_basis(field: FieldBackend, *polys: LinPoly):
    for p in polys:
        if p.basis != field.name:
            raise BasisMismatchError(p.basis, field.name)


def frobenius_power(field: FieldBackend, a: int, i: int) -> int:
    """a^[i]; negative i is taken modulo m."""
    return field.qpow(a, i % field.degree)


def qp_zero(field: FieldBackend) -> LinPoly:
    return LinPoly((), field.name)


def qp_monomial(field: FieldBackend, i: int, c: Optional[int] = None) -> LinPoly:
    """c · x^[i], with c = 1 by default."""
    c = field.one if c is None else c
    return LinPoly((0,) * i + (c,), field.name)


def qp_identity(field: FieldBackend) -> LinPoly:
    return qp_monomial(field, 0)


def qp_eval(field: FieldBackend, P: LinPoly, x: int) -> int:
    """Σ p_i · x^[i], walking the conjugates of x by repeated squaring."""
    acc = field.zero
    xi = x
    for i, p in enumerate(P.coeffs):
        if i:
            xi = field.square(xi)
        if p:
            acc = field.add(acc, field.mul(p, xi))
    return acc


def qp_eval_many(field: FieldBackend, P: LinPoly, xs: Iterable[int]) -> List[int]:
    return [qp_eval(field, P, x) for x in xs]


def qp_add(field: FieldBackend, A: LinPoly, B: LinPoly) -> LinPoly:
    if A.basis != B.basis:
        raise BasisMismatchError(A.basis, B.basis)
    _check_basis(field, A)
    long, short = (A.coeffs, B.coeffs) if len(A.coeffs) >= len(B.coeffs) else (B.coeffs, A.coeffs)
    out = list(long)
    for i, b in enumerate(short):
        out[i] = field.add(out[i], b)
    return LinPoly(tuple(out), field.name)


def qp_scale(field: FieldBackend, c: int, P: LinPoly) -> LinPoly:
    if not c or P.is_zero():
        return qp_zero(field)
    return LinPoly(tuple(field.scale_vector(c, list(P.coeffs))), field.name)


def qp_frobenius(field: FieldBackend, P: LinPoly) -> LinPoly:
    """x^[1] ∘ P: every coefficient squared, q-degrees shifted up by one."""
    if P.is_zero():
        return P
    return LinPoly((0,) + tuple(field.square(p) if p else 0 for p in P.coeffs), field.name)


def qp_compose(field: FieldBackend, A: LinPoly, B: LinPoly) -> LinPoly:
    """A ∘ B with c_t = Σ_i a_i · b_{t-i}^[i]."""
    if A.basis != B.basis:
        raise BasisMismatchError(A.basis, B.basis)
    if A.is_zero() or B.is_zero():
        return qp_zero(field)
    out = [field.zero] * (len(A.coeffs) + len(B.coeffs) - 1)
    twisted = list(B.coeffs)
    for i, a in enumerate(A.coeffs):
        if i:
            twisted = [field.square(b) if b else 0 for b in twisted]
        if not a:
            continue
        for j, b in enumerate(field.scale_vector(a, twisted)):
            if b:
                out[i + j] = field.add(out[i + j], b)
    return LinPoly(tuple(out), field.name)


def qp_left_divide(
    field: FieldBackend,
    N: LinPoly,
    D: LinPoly,
    wanted: Optional[int] = None,
) -> Tuple[LinPoly, Optional[LinPoly]]:
    """Left division N = D ∘ Q + R with deg_q R < deg_q D.

    Each quotient coefficient needs an inverse Frobenius power of top / lc(D).
    The leading term of each subtraction cancels by construction and is never
    computed.

    With ``wanted`` set the remainder is dropped: positions below deg_q D only
    feed R, so they are never updated and R is None. Q is still computed in
    full, since the low coefficients callers want depend on every higher one.
    """
    if D.is_zero():
        raise ZeroDivisorError()
    _check_basis(field, N, D)
    L = D.qdeg
    if N.qdeg < L:
        return qp_zero(field), (None if wanted is not None else N)

    m = field.degree
    work = list(N.coeffs)
    quotient = [field.zero] * (N.qdeg - L + 1)
    lc_inv = field.inv(D.coeffs[L])
    for t in range(N.qdeg, L - 1, -1):
        top = work[t]
        if not top:
            continue
        c = field.qpow(field.mul(top, lc_inv), (m - L) % m)
        quotient[t - L] = c
        # subtract D ∘ (c x^[t-L]) = Σ_i d_i c^[i] x^[i+t-L]; i = L clears work[t]
        ci = c
        for i in range(L):
            if i:
                ci = field.square(ci)
            pos = i + t - L
            if wanted is not None and pos < L:
                continue
            d = D.coeffs[i]
            if d:
                work[pos] = field.add(work[pos], field.mul(d, ci))
    Q = LinPoly(tuple(quotient), field.name)
    if wanted is not None:
        return Q, None
    return Q, LinPoly(tuple(work[:L]), field.name)


def annihilator_poly(field: FieldBackend, points: Sequence[int]) -> LinPoly:
    """Monic subspace polynomial of q-degree len(points) vanishing on their GF(2)-span.

    A_{i+1} = A_i^[1] + A_i(g_i) · A_i.
    """
    A = qp_identity(field)
    for i, g in enumerate(points):
        v = qp_eval(field, A, g)
        if not v:
            raise DependentPointsError(i)
        A = qp_add(field, qp_frobenius(field, A), qp_scale(field, v, A))
    return A


def interpolation_poly(field: FieldBackend, points: Sequence[int], values: Sequence[int]) -> LinPoly:
    """Newton-form interpolation: deg_q I < len(points) and I(points_i) = values_i."""
    if len(points) != len(values):
        raise ValueError(f"{len(points)} points but {len(values)} values")
    A = qp_identity(field)
    I = qp_zero(field)
    for i, (g, r) in enumerate(zip(points, values)):
        v = qp_eval(field, A, g)
        if not v:
            raise DependentPointsError(i)
        residual = field.add(r, qp_eval(field, I, g))
        if residual:
            I = qp_add(field, I, qp_scale(field, field.mul(residual, field.inv(v)), A))
        if i + 1 < len(points):
            A = qp_add(field, qp_frobenius(field, A), qp_scale(field, v, A))
    return I


def q_transform(field: NormalBasisField, vec: Sequence[int], rows: Optional[Iterable[int]] = None) -> List[int]:
    """ã_i = Σ_j a_j · α^[i+j] for i in ``rows`` (all m rows by default).

    The forward transform is its own inverse when the basis is self-dual.
    """
    m = field.degree
    if len(vec) > m:
        raise ValueError(f"q-transform input has {len(vec)} entries, at most {m} allowed")
    rows = range(m) if rows is None else rows
    support = [(j, a) for j, a in enumerate(vec) if a]
    out = []
    for i in rows:
        acc = field.zero
        for j, a in support:
            acc = field.add(acc, field.mul_alpha_pow(a, (i + j) % m))
        out.append(acc)
    return out
