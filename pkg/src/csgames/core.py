"""Coalition vectors over a type composition and the orders on them.

A coalition vector is a plain tuple of non-negative ints, one entry per
equivalence class of agents. Classes are numbered from the most desirable
(position 0) to the least desirable, so moving a unit to a lower position
makes a coalition stronger.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

Vector = tuple[int, ...]


@dataclass(frozen=True)
class TypeComposition:
    """Sizes ``(n_1, ..., n_t)`` of the equivalence classes of agents."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts:
            raise ValueError("a type composition needs at least one class")
        if any(p < 1 for p in parts):
            raise ValueError(f"class sizes must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "TypeComposition":
        return cls(tuple(parts))

    @property
    def t(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def grid_size(self) -> int:
        size = 1
        for p in self.parts:
            size *= p + 1
        return size

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return fmt_vector(self.parts)

    def top(self) -> Vector:
        return self.parts

    def zero(self) -> Vector:
        return (0,) * self.t

    def unit(self, i: int) -> Vector:
        return tuple(1 if j == i else 0 for j in range(self.t))

    def contains(self, s: Sequence[int]) -> bool:
        return len(s) == self.t and all(0 <= a <= p for a, p in zip(s, self.parts))

    def check(self, s: Sequence[int]) -> Vector:
        """Return ``s`` as a tuple, raising ``ValueError`` if it is out of bounds."""
        s = tuple(s)
        if len(s) != self.t:
            raise ValueError(f"vector {s} has length {len(s)}, composition has {self.t} classes")
        if not self.contains(s):
            raise ValueError(f"vector {s} is outside the bounds {self.parts}")
        return s

    def vectors(self) -> Iterator[Vector]:
        """All coalition vectors, in lexicographically decreasing order."""
        return itertools.product(*(range(p, -1, -1) for p in self.parts))

    def dominates(self, other: "TypeComposition") -> bool:
        """Same number of classes and componentwise at least ``other``."""
        return self.t == other.t and leq(other.parts, self.parts)


def _same_length(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")


def leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise order ``a <= b``."""
    _same_length(a, b)
    return all(x <= y for x, y in zip(a, b))


def prefix_sums(a: Sequence[int]) -> Vector:
    return tuple(itertools.accumulate(a))


def shift_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Shift order: every prefix sum of ``a`` is at most that of ``b``."""
    _same_length(a, b)
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def incomparable(a: Sequence[int], b: Sequence[int]) -> bool:
    return not shift_leq(a, b) and not shift_leq(b, a)


def lex_gtr(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``a`` is larger than ``b`` at the first index where they differ."""
    _same_length(a, b)
    for x, y in zip(a, b):
        if x != y:
            return x > y
    raise ValueError(f"lex_gtr needs distinct vectors, got {tuple(a)} twice")


def vadd(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def fmt_vector(a: Sequence) -> str:
    return "(" + ",".join(str(x) for x in a) + ")"


def parse_vector(text: str) -> Vector:
    """Parse ``"(1,2,0)"`` or ``"1,2,0"`` into a tuple of ints."""
    body = text.strip().strip("()[]").strip()
    if not body:
        raise ValueError(f"empty vector: {text!r}")
    try:
        return tuple(int(p) for p in body.split(","))
    except ValueError:
        raise ValueError(f"not an integer vector: {text!r}") from None
