"""GF(2^127) arithmetic in the polynomial basis modulo x^127 + x + 1.

Elements travel through the kernels as packed ints (bit i = coefficient of x^i,
``lo | hi << 64``); the ``poly_*`` functions wrap them for ``FieldElement`` values.
"""

from functools import lru_cache
from typing import List

import numpy as np

from config.defaults import FIELD_DEGREE
from engine.errors import InverseOfZeroError
from models.field_element import MASK64, MASK127, FieldElement, UnreducedProduct

M = FIELD_DEGREE
MODULUS = (1 << M) | 0b11


def _spread_byte(b: int) -> int:
    out = 0
    for i in range(8):
        if (b >> i) & 1:
            out |= 1 << (2 * i)
    return out


# 8-bit -> 16-bit zero interleave
SPREAD_TABLE = tuple(_spread_byte(b) for b in range(256))


def comb_mul(a: int, b: int) -> int:
    """Unreduced product (degree <= 252) by the right-to-left comb.

    Bit j of both 64-bit words of a is scanned at once; b·x^j is added at the
    word offset under an all-ones or zero mask, then b moves up by one.
    """
    a0 = a & MASK64
    a1 = a >> 64
    shifted = b
    acc = 0
    for j in range(64):
        acc ^= shifted & -((a0 >> j) & 1)
        acc ^= (shifted << 64) & -((a1 >> j) & 1)
        shifted <<= 1
    return acc


def reduce_int(u: int) -> int:
    # x^(127+i) = x^(i+1) + x^i; one fold suffices below degree 253
    h = u >> M
    return (u & MASK127) ^ h ^ (h << 1)


def mul_int(a: int, b: int) -> int:
    return reduce_int(comb_mul(a, b))


def spread_int(a: int) -> int:
    out = 0
    for i in range(16):
        out |= SPREAD_TABLE[(a >> (8 * i)) & 0xFF] << (16 * i)
    return out


def square_int(a: int) -> int:
    return reduce_int(spread_int(a))


def inv_int(a: int) -> int:
    """Inverse by the binary-polynomial extended Euclidean algorithm (not constant time)."""
    if a == 0:
        raise InverseOfZeroError("poly")
    u, v = a, MODULUS
    g1, g2 = 1, 0
    while u != 1:
        j = u.bit_length() - v.bit_length()
        if j < 0:
            u, v = v, u
            g1, g2 = g2, g1
            j = -j
        u ^= v << j
        g1 ^= g2 << j
    return g1


def pow_int(a: int, e: int) -> int:
    result = 1
    base = a
    while e:
        if e & 1:
            result = mul_int(result, base)
        base = square_int(base)
        e >>= 1
    return result


def parity(v: int) -> int:
    return v.bit_count() & 1


@lru_cache(maxsize=None)
def trace_mask() -> int:
    """Bit t set iff Tr(x^t) = 1, so that Tr(z) = parity(z & mask)."""
    mask = 0
    for t in range(M):
        s = 1 << t
        acc = 0
        for _ in range(M):
            acc ^= s
            s = square_int(s)
        if acc == 1:
            mask |= 1 << t
    return mask


def trace_int(a: int) -> int:
    return parity(a & trace_mask())


def random_int(rng: np.random.Generator) -> int:
    return int.from_bytes(rng.bytes(16), "little") & MASK127


def random_nonzero_int(rng: np.random.Generator) -> int:
    while True:
        v = random_int(rng)
        if v:
            return v


# --- FieldElement operations ---

def poly_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return FieldElement(a.lo ^ b.lo, a.hi ^ b.hi)


def poly_comb(a: FieldElement, b: FieldElement) -> UnreducedProduct:
    return UnreducedProduct.from_int(comb_mul(a.to_int(), b.to_int()))


def poly_reduce(u: UnreducedProduct) -> FieldElement:
    return FieldElement.from_int(reduce_int(u.to_int()))


def poly_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return FieldElement.from_int(mul_int(a.to_int(), b.to_int()))


def poly_square(a: FieldElement) -> FieldElement:
    return FieldElement.from_int(square_int(a.to_int()))


def poly_inv(a: FieldElement) -> FieldElement:
    return FieldElement.from_int(inv_int(a.to_int()))


def poly_trace(a: FieldElement) -> int:
    return trace_int(a.to_int())


def poly_to_hex(a: FieldElement) -> str:
    return f"{a.hi:016x}{a.lo:016x}"


def poly_from_hex(text: str) -> FieldElement:
    text = text.strip().lower()
    if len(text) != 32:
        raise ValueError(f"Expected 32 hex digits, got {len(text)}: {text!r}")
    value = int(text, 16)
    if value >> M:
        raise ValueError(f"Top bit of the high limb must be zero: {text!r}")
    return FieldElement.from_int(value)


def int_to_hex(value: int) -> str:
    return poly_to_hex(FieldElement.from_int(value))


def hex_to_int(text: str) -> int:
    return poly_from_hex(text).to_int()


class PolyBasisField:
    """Polynomial-basis backend with the interface shared by both field backends."""

    name = "poly"
    degree = M
    zero = 0
    one = 1
    has_cyclic_frobenius = False

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return reduce_int(comb_mul(a, b))

    def mul_scalar(self, c: int, a: int) -> int:
        return self.mul(c, a)

    def scale_vector(self, c: int, values) -> List[int]:
        return [self.mul(c, v) if v else 0 for v in values]

    def square(self, a: int) -> int:
        return reduce_int(spread_int(a))

    def inv(self, a: int) -> int:
        return inv_int(a)

    def qpow(self, a: int, i: int) -> int:
        """a^[i] as i squarings."""
        for _ in range(i % M):
            a = self.square(a)
        return a

    def random(self, rng: np.random.Generator) -> int:
        return random_int(rng)

    def random_nonzero(self, rng: np.random.Generator) -> int:
        return random_nonzero_int(rng)
