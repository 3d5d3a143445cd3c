from dataclasses import dataclass, field
from typing import Dict, List, Tuple


@dataclass(frozen=True)
class NormalBasisCtx:
    m: int
    entries: Tuple[Tuple[int, int], ...]      # nonzero (row, col) of M, sorted
    complexity: int                           # C_M
    alpha_poly: int                           # α in the polynomial basis, packed
    self_dual: bool
    conjugates: Tuple[int, ...]               # α^[j] in the polynomial basis
    to_poly_rows: Tuple[int, ...]             # row t: normal coords feeding x^t
    from_poly_rows: Tuple[int, ...]           # row j: poly coords feeding α^[j]
    col_masks: Tuple[int, ...]                # col j of M as a bit mask over rows
    table_pattern: Tuple[Tuple[int, ...], ...]  # P[r]: T_b indices summed against T_a[r]
    checksum: str = ""

    def row_weights(self) -> List[int]:
        weights = [0] * self.m
        for row, _ in self.entries:
            weights[row] += 1
        return weights

    def row_weight_histogram(self) -> Dict[int, int]:
        hist: Dict[int, int] = {}
        for w in self.row_weights():
            hist[w] = hist.get(w, 0) + 1
        return dict(sorted(hist.items()))


@dataclass
class ShiftTable:
    entries: List[int] = field(default_factory=list)   # entry r: a^[-r], bit 127 may be dirty
