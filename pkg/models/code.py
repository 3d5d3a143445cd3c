from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np


@dataclass
class GabidulinCode:
    n: int
    k: int
    g: Tuple[int, ...]                     # generating elements, polynomial basis
    m: int = 127
    h: Tuple[int, ...] = ()                # dual generating elements, polynomial basis
    seed: Optional[int] = None
    cache: Dict[str, object] = field(default_factory=dict, compare=False, repr=False)

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    @property
    def tau_max(self) -> int:
        return (self.n - self.k) // 2


@dataclass
class TddPrecomp:
    A: np.ndarray                          # m x n over GF(2), H' = H A
    Adag: np.ndarray                       # n x m over GF(2), Adag A = I
    gsub_inv: Tuple[Tuple[int, ...], ...]  # k x k, normal basis
    a_rows: Tuple[Tuple[int, ...], ...]    # row t of A: indices j with A[t, j] = 1
    adag_rows: Tuple[Tuple[int, ...], ...]  # row j of Adag: indices t with Adag[j, t] = 1


@dataclass
class CodeInstance:
    msg: List[int]
    codeword: List[int]
    error: List[int]
    received: List[int]
    tau: int
    seed: int
