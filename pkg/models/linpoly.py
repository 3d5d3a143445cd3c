from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class LinPoly:
    coeffs: Tuple[int, ...] = ()   # coefficient of x^[i] at index i, trailing zeros trimmed
    basis: str = "poly"            # "poly" or "normal"

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", coeffs[:end])

    @property
    def qdeg(self) -> int:
        """q-degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0
