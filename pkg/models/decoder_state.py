from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from models.linpoly import LinPoly


@dataclass
class WbaState:
    p0: LinPoly
    q0: LinPoly
    p1: LinPoly
    q1: LinPoly
    u0: List[int]
    u1: List[int]
    annihilator: LinPoly
    interpolator: LinPoly
    n: int
    k: int
    l: int = 0
    iterations: int = 0
    mode: str = "constant-time"
    finished: bool = False
    latched: Optional[Tuple[LinPoly, LinPoly]] = None
    substitutions: int = 0


@dataclass
class TddWork:
    syndromes: List[int] = field(default_factory=list)
    gamma: Optional[LinPoly] = None
    tau: int = 0
    e_tilde: List[int] = field(default_factory=list)
    e: List[int] = field(default_factory=list)
    e_prime: List[int] = field(default_factory=list)
    msg: List[int] = field(default_factory=list)
