"""Bit tables over the full grid of coalition vectors of one composition.

Vectors are indexed in lexicographically decreasing order, so index 0 is
the grand coalition and the last index is the empty coalition. Sets of
vectors are Python ints used as bitsets.
"""

from __future__ import annotations

import threading
from functools import lru_cache

from .core import TypeComposition, Vector


class Grid:
    def __init__(self, composition: TypeComposition):
        self.composition = composition
        parts = composition.parts
        t = len(parts)
        self.size = composition.grid_size
        self.vectors: list[Vector] = list(composition.vectors())
        self.prefix = [_prefix(v) for v in self.vectors]
        radix = [1] * t
        for i in range(t - 2, -1, -1):
            radix[i] = radix[i + 1] * (parts[i + 1] + 1)
        self._radix = radix

        # upper moves: add a unit below capacity, or move a unit from class j to a stronger class i < j
        self.upper: list[tuple[int, ...]] = []
        for v in self.vectors:
            idx = self.index(v)
            ups = []
            for i in range(t):
                if v[i] < parts[i]:
                    ups.append(idx - radix[i])
                    for j in range(i + 1, t):
                        if v[j] > 0:
                            ups.append(idx - radix[i] + radix[j])
            self.upper.append(tuple(ups))
        self.full = (1 << self.size) - 1

        seps = []
        for v in self.vectors:
            bits = 0
            if t == 1:
                bits = 1 if v[0] > 0 else 0
            else:
                for j in range(t - 1):
                    if v[j] > 0 and v[j + 1] < parts[j + 1]:
                        bits |= 1 << j
            seps.append(bits)
        self.sep_bits = seps
        self.sep_goal = 1 if t == 1 else (1 << (t - 1)) - 1

        self._lock = threading.Lock()
        self._up_masks: list[int] | None = None
        self._incomparable: list[int] | None = None

    def index(self, v) -> int:
        parts = self.composition.parts
        return sum((p - a) * r for p, a, r in zip(parts, v, self._radix))

    def mask_of(self, vectors) -> int:
        m = 0
        for v in vectors:
            m |= 1 << self.index(v)
        return m

    def members(self, mask: int) -> list[Vector]:
        out = []
        while mask:
            low = mask & -mask
            out.append(self.vectors[low.bit_length() - 1])
            mask ^= low
        return out

    def _build_order_masks(self) -> None:
        with self._lock:
            if self._up_masks is not None:
                return
            prefix = self.prefix
            n = self.size
            up = [0] * n
            for a in range(n):
                pa = prefix[a]
                m = 0
                for b in range(a + 1):
                    # lex-larger vectors come first, so b <= a is necessary for pa <= pb
                    if all(x <= y for x, y in zip(pa, prefix[b])):
                        m |= 1 << b
                up[a] = m
            down = [0] * n
            for a in range(n):
                m = up[a]
                while m:
                    low = m & -m
                    down[low.bit_length() - 1] |= 1 << a
                    m ^= low
            self._incomparable = [self.full & ~(up[a] | down[a]) for a in range(n)]
            self._up_masks = up

    @property
    def up_masks(self) -> list[int]:
        """``up_masks[a]`` has bit ``b`` set iff vector a is shift-below vector b."""
        if self._up_masks is None:
            self._build_order_masks()
        return self._up_masks

    @property
    def incomparable_masks(self) -> list[int]:
        if self._incomparable is None:
            self._build_order_masks()
        return self._incomparable

    def up_closure(self, vectors) -> int:
        """Bitset of all grid vectors shift-above some vector in ``vectors``."""
        if self._up_masks is not None:
            m = 0
            for v in vectors:
                m |= self._up_masks[self.index(v)]
            return m
        rows = [_prefix(v) for v in vectors]
        m = 0
        for i, p in enumerate(self.prefix):
            for r in rows:
                if all(x <= y for x, y in zip(r, p)):
                    m |= 1 << i
                    break
        return m


def _prefix(v) -> tuple[int, ...]:
    out = []
    s = 0
    for x in v:
        s += x
        out.append(s)
    return tuple(out)


@lru_cache(maxsize=256)
def grid_for(composition: TypeComposition) -> Grid:
    return Grid(composition)
