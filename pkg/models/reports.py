from dataclasses import dataclass, field
from typing import Dict, Optional

from config.defaults import FIELD_DEGREE, OP_KINDS


@dataclass
class ComplexityParams:
    n: int
    k: int
    m: int = FIELD_DEGREE
    tau: Optional[int] = None
    c_m: int = 501
    c_inv: int = 0

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    @property
    def tau_eff(self) -> int:
        return (self.n - self.k) // 2 if self.tau is None else self.tau


@dataclass
class OpCountReport:
    decoder: str
    trials: int = 0
    seed: int = 0
    n: int = 0
    k: int = 0
    tau: int = 0
    totals: Dict[str, int] = field(default_factory=lambda: {kind: 0 for kind in OP_KINDS})
    nested: Dict[str, int] = field(default_factory=lambda: {kind: 0 for kind in OP_KINDS})

    def merge(self, counts: Dict[str, int], nested: Optional[Dict[str, int]] = None):
        for kind, value in counts.items():
            self.totals[kind] = self.totals.get(kind, 0) + value
        for kind, value in (nested or {}).items():
            self.nested[kind] = self.nested.get(kind, 0) + value

    def averages(self) -> Dict[str, float]:
        if self.trials == 0:
            return {kind: 0.0 for kind in OP_KINDS}
        return {kind: self.totals.get(kind, 0) / self.trials for kind in OP_KINDS}

    def to_dict(self) -> dict:
        out = dict(self.averages())
        out["trials"] = self.trials
        out["seed"] = self.seed
        return out


@dataclass
class BenchReport:
    kind: str                                   # "field" or "decoders"
    label: str = ""                             # basis or decoder pair
    seconds_per_million: Dict[str, float] = field(default_factory=dict)
    calls: Dict[str, int] = field(default_factory=dict)
    decoder_seconds: Dict[str, float] = field(default_factory=dict)
    per_decode_seconds: Dict[str, float] = field(default_factory=dict)
    ratios: Dict[str, float] = field(default_factory=dict)
    trials: int = 0
    repetitions: int = 1
    seed: int = 0
    checksum: int = 0
    environment: Dict[str, str] = field(default_factory=dict)


@dataclass
class RoundtripReport:
    trials: int
    tau: int
    seed: int
    n: int
    k: int
    ok: Dict[str, int] = field(default_factory=dict)         # decoder -> exact recoveries
    failures: Dict[str, int] = field(default_factory=dict)   # decoder -> DecodeFailure count
    agreement: int = 0                                       # trials where both decoders returned the same message

    def all_ok(self) -> bool:
        return all(count == self.trials for count in self.ok.values())
