"""GF(2^127) arithmetic in a self-dual normal basis.

Bit j of a packed element is the coordinate of α^[j]. q-powers are cyclic shifts
of the 127 coordinates, products go through shift tables, and products with
α^[i] use the multiplication table directly.
"""

from typing import List

import numpy as np

from config.defaults import FIELD_DEGREE
from engine.errors import InverseOfZeroError
from engine.gf_poly import parity, random_int
from models.field_element import MASK63, MASK64, MASK127, NormalFieldElement
from models.normal_basis import NormalBasisCtx, ShiftTable

M = FIELD_DEGREE
ONE = MASK127


def _qpow_limbs(a: int, j: int, hi_mask: int) -> int:
    """Cyclic shift by 0 < j < m on the two-limb layout; words never exceed 64 bits."""
    al = a & MASK64
    au = (a >> 64) & MASK64
    if j <= 63:
        bl = ((al << j) | (au >> (63 - j))) & MASK64
        bu = ((au << j) | (al >> (64 - j))) & hi_mask
    else:
        k = M - j
        bl = ((al >> k) | (au << (64 - k))) & MASK64
        bu = ((au >> k) | (al << (63 - k))) & hi_mask
    return bl | (bu << 64)


def qpow_int(a: int, i: int) -> int:
    j = i % M
    if j == 0:
        return a
    return _qpow_limbs(a, j, MASK63)


def make_shift_table(a: int) -> ShiftTable:
    """Entry r holds a^[-r]; the top bit of the high word is left unmasked."""
    entries = [a]
    for r in range(1, M):
        entries.append(_qpow_limbs(a, M - r, MASK64))
    return ShiftTable(entries)


def rotate_table(table: ShiftTable, j: int) -> ShiftTable:
    """Shift table of x^[j] from the shift table of x."""
    j %= M
    if j == 0:
        return ShiftTable(list(table.entries))
    e = table.entries
    return ShiftTable(e[M - j:] + e[:M - j])


def mul_shift_tables(ta: ShiftTable, tb: ShiftTable, ctx: NormalBasisCtx) -> int:
    a_entries = ta.entries
    b_entries = tb.entries
    c = 0
    for r, pattern in enumerate(ctx.table_pattern):
        s = 0
        for idx in pattern:
            s ^= b_entries[idx]
        c ^= a_entries[r] & s
    return c & MASK127


def mul_alpha(v: int, ctx: NormalBasisCtx) -> int:
    out = 0
    for j, mask in enumerate(ctx.col_masks):
        if (v & mask).bit_count() & 1:
            out |= 1 << j
    return out


def mul_alpha_pow_int(a: int, i: int, ctx: NormalBasisCtx) -> int:
    """a · α^[i] = (α · a^[-i])^[i]."""
    i %= M
    return qpow_int(mul_alpha(qpow_int(a, M - i), ctx), i)


def mul_int(a: int, b: int, ctx: NormalBasisCtx) -> int:
    return mul_shift_tables(make_shift_table(a), make_shift_table(b), ctx)


def to_poly_int(v: int, ctx: NormalBasisCtx) -> int:
    out = 0
    for t, mask in enumerate(ctx.to_poly_rows):
        if parity(v & mask):
            out |= 1 << t
    return out


def from_poly_int(z: int, ctx: NormalBasisCtx) -> int:
    out = 0
    for j, mask in enumerate(ctx.from_poly_rows):
        if parity(z & mask):
            out |= 1 << j
    return out


class NormalBasisField:
    """Normal-basis backend; composite operations are built from the primitives below."""

    name = "normal"
    degree = M
    zero = 0
    one = ONE
    has_cyclic_frobenius = True

    def __init__(self, ctx: NormalBasisCtx):
        self.ctx = ctx

    # primitives

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def make_shift_table(self, a: int) -> ShiftTable:
        return make_shift_table(a)

    def mul_shift_tables(self, ta: ShiftTable, tb: ShiftTable) -> int:
        return mul_shift_tables(ta, tb, self.ctx)

    def mul_alpha_pow(self, a: int, i: int) -> int:
        return mul_alpha_pow_int(a, i, self.ctx)

    def qpow(self, a: int, i: int) -> int:
        return qpow_int(a, i)

    def rotate_table(self, table: ShiftTable, j: int) -> ShiftTable:
        return rotate_table(table, j)

    def square(self, a: int) -> int:
        return qpow_int(a, 1)

    # composites

    def mul(self, a: int, b: int) -> int:
        return self.mul_shift_tables(self.make_shift_table(a), self.make_shift_table(b))

    def mul_scalar(self, c: int, a: int) -> int:
        return self.mul(c, a)

    def scale_vector(self, c: int, values) -> List[int]:
        if not any(values):
            return [0] * len(values)
        tc = self.make_shift_table(c)
        return [self.mul_shift_tables(tc, self.make_shift_table(v)) if v else 0 for v in values]

    def inv(self, a: int) -> int:
        """Fermat inversion with nine table products and ten q-powers.

        126 = 2·3·(1 + 2·2·(1 + 2·2)) gives the chain below; shift tables of
        partial results used twice are kept.
        """
        if a == 0:
            raise InverseOfZeroError("normal")
        t_a = self.make_shift_table(a)
        a1 = self.mul_shift_tables(t_a, self.rotate_table(t_a, 1))
        t_a1 = self.make_shift_table(a1)
        t1 = self.mul_shift_tables(self.rotate_table(t_a, 1), self.rotate_table(t_a1, 2))
        a2 = self.mul_shift_tables(self.make_shift_table(t1), self.rotate_table(t_a1, 4))
        t_a2 = self.make_shift_table(a2)
        a3 = self.mul_shift_tables(t_a2, self.rotate_table(t_a2, 5))
        t_a3 = self.make_shift_table(a3)
        t2 = self.mul_shift_tables(t_a, t_a3)
        a4 = self.mul_shift_tables(self.make_shift_table(t2), self.rotate_table(t_a3, 10))
        t_a4 = self.make_shift_table(a4)
        t3 = self.mul_shift_tables(t_a4, self.rotate_table(t_a4, 21))
        a5 = self.mul_shift_tables(self.make_shift_table(t3), self.rotate_table(t_a4, 42))
        t_a5 = self.make_shift_table(a5)
        p = self.mul_shift_tables(t_a5, self.rotate_table(t_a5, 63))
        return self.qpow(p, 1)

    def random(self, rng: np.random.Generator) -> int:
        return random_int(rng)

    def random_nonzero(self, rng: np.random.Generator) -> int:
        while True:
            v = random_int(rng)
            if v:
                return v

    def to_poly(self, v: int) -> int:
        return to_poly_int(v, self.ctx)

    def from_poly(self, z: int) -> int:
        return from_poly_int(z, self.ctx)


# --- NormalFieldElement operations ---

def nb_add(a: NormalFieldElement, b: NormalFieldElement) -> NormalFieldElement:
    return NormalFieldElement(a.lo ^ b.lo, a.hi ^ b.hi)


def nb_qpow(a: NormalFieldElement, i: int) -> NormalFieldElement:
    return NormalFieldElement.from_int(qpow_int(a.to_int(), i))


def nb_square(a: NormalFieldElement) -> NormalFieldElement:
    return nb_qpow(a, 1)


def nb_make_shift_table(a: NormalFieldElement) -> ShiftTable:
    return make_shift_table(a.to_int())


def nb_mul_shift_tables(ta: ShiftTable, tb: ShiftTable, ctx: NormalBasisCtx) -> NormalFieldElement:
    return NormalFieldElement.from_int(mul_shift_tables(ta, tb, ctx))


def nb_mul(a: NormalFieldElement, b: NormalFieldElement, ctx: NormalBasisCtx) -> NormalFieldElement:
    return NormalFieldElement.from_int(mul_int(a.to_int(), b.to_int(), ctx))


def nb_mul_alpha_pow(a: NormalFieldElement, i: int, ctx: NormalBasisCtx) -> NormalFieldElement:
    if not 0 <= i < M:
        raise ValueError(f"q-power index must lie in [0, {M}), got {i}")
    return NormalFieldElement.from_int(mul_alpha_pow_int(a.to_int(), i, ctx))


def nb_inv(a: NormalFieldElement, ctx: NormalBasisCtx) -> NormalFieldElement:
    return NormalFieldElement.from_int(NormalBasisField(ctx).inv(a.to_int()))


def nb_to_poly(a: NormalFieldElement, ctx: NormalBasisCtx) -> int:
    return to_poly_int(a.to_int(), ctx)


def nb_from_poly(z: int, ctx: NormalBasisCtx) -> NormalFieldElement:
    return NormalFieldElement.from_int(from_poly_int(z, ctx))
