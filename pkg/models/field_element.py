from typing import NamedTuple

MASK64 = (1 << 64) - 1
MASK63 = (1 << 63) - 1
MASK127 = (1 << 127) - 1


class FieldElement(NamedTuple):
    lo: int = 0   # coefficients of x^0..x^63
    hi: int = 0   # coefficients of x^64..x^126, top bit clear

    @classmethod
    def from_int(cls, value: int) -> "FieldElement":
        return cls(value & MASK64, value >> 64)

    def to_int(self) -> int:
        return self.lo | (self.hi << 64)


class NormalFieldElement(NamedTuple):
    lo: int = 0   # coordinates w.r.t. α^[0]..α^[63]
    hi: int = 0   # coordinates w.r.t. α^[64]..α^[126], top bit clear

    @classmethod
    def from_int(cls, value: int) -> "NormalFieldElement":
        return cls(value & MASK64, value >> 64)

    @classmethod
    def one(cls) -> "NormalFieldElement":
        return cls(MASK64, MASK63)

    def to_int(self) -> int:
        return self.lo | (self.hi << 64)


class UnreducedProduct(NamedTuple):
    w0: int = 0
    w1: int = 0
    w2: int = 0
    w3: int = 0

    @classmethod
    def from_int(cls, value: int) -> "UnreducedProduct":
        return cls(
            value & MASK64,
            (value >> 64) & MASK64,
            (value >> 128) & MASK64,
            (value >> 192) & MASK64,
        )

    def to_int(self) -> int:
        return self.w0 | (self.w1 << 64) | (self.w2 << 128) | (self.w3 << 192)
