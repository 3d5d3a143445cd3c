"""Counting field backends: every primitive call is tallied per operation kind.

Composite operations (generic multiply in the normal basis, q-powers in the
polynomial basis) are not counted themselves; the primitives they run are.
Calls made while an inversion is in progress land in ``nested`` so the main
counter shows top-level calls only.
"""

from collections import Counter
from typing import Dict

from engine.gf_normal import NormalBasisField
from engine.gf_poly import PolyBasisField
from models.normal_basis import NormalBasisCtx


class _CountingMixin:
    def _init_counters(self):
        self.counts: Counter = Counter()
        self.nested: Counter = Counter()
        self._depth = 0

    def _tick(self, kind: str):
        (self.nested if self._depth else self.counts)[kind] += 1

    def reset(self):
        self.counts.clear()
        self.nested.clear()
        self._depth = 0

    def snapshot(self) -> Dict[str, int]:
        return dict(self.counts)

    def add(self, a, b):
        self._tick("add")
        return super().add(a, b)

    def square(self, a):
        self._tick("square")
        return super().square(a)

    def inv(self, a):
        self._tick("invert")
        self._depth += 1
        try:
            return super().inv(a)
        finally:
            self._depth -= 1


class CountingPolyField(_CountingMixin, PolyBasisField):
    def __init__(self):
        super().__init__()
        self._init_counters()

    def mul(self, a, b):
        self._tick("multiply")
        return super().mul(a, b)


class CountingNormalField(_CountingMixin, NormalBasisField):
    def __init__(self, ctx: NormalBasisCtx):
        super().__init__(ctx)
        self._init_counters()

    def make_shift_table(self, a):
        self._tick("set_shift_table")
        return super().make_shift_table(a)

    def mul_shift_tables(self, ta, tb):
        self._tick("multiply_shift_tables")
        return super().mul_shift_tables(ta, tb)

    def mul_alpha_pow(self, a, i):
        self._tick("mul_alpha_pow")
        return super().mul_alpha_pow(a, i)

    def qpow(self, a, i):
        self._tick("q_power")
        return super().qpow(a, i)

    def rotate_table(self, table, j):
        self._tick("q_power")
        return super().rotate_table(table, j)
