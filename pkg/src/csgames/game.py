"""Complete simple games given by a composition and their shift-minimal winning vectors."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .core import TypeComposition, Vector, incomparable, lex_gtr, shift_leq
from .grid import grid_for

# Winning tables are kept per game when the grid has at most this many vectors.
MEMO_GRID_LIMIT = 10**6


class ValidationError(ValueError):
    """A matrix of rows that is not the SMW matrix of any complete simple game.

    Row and class indices in the subclasses are 1-based.
    """


class BoundViolation(ValidationError):
    def __init__(self, row: int, detail: str = ""):
        self.row = row
        super().__init__(f"row {row} violates the class bounds{': ' + detail if detail else ''}")


class NotIncomparable(ValidationError):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"rows {i} and {j} are comparable in the shift order")


class ClassSeparationFailure(ValidationError):
    def __init__(self, j: int):
        self.j = j
        super().__init__(f"no row separates class {j} from class {j + 1}")


class RowOrderViolation(ValidationError):
    def __init__(self, row: int):
        self.row = row
        super().__init__(f"row {row} is not lexicographically larger than row {row + 1}")


class MonotonicityViolation(ValueError):
    pass


_lock = threading.Lock()


@dataclass(frozen=True)
class CompleteSimpleGame:
    """A validated pair (composition, SMW rows); build with :func:`validate`."""

    composition: TypeComposition
    smw: tuple[Vector, ...]
    _winning: list = field(default_factory=list, init=False, repr=False, compare=False, hash=False)

    @property
    def t(self) -> int:
        return self.composition.t

    @property
    def n(self) -> int:
        return self.composition.n

    @property
    def r(self) -> int:
        return len(self.smw)

    def winning_mask(self) -> int:
        """Bitset of winning vectors over the composition's grid (memoised)."""
        if self._winning:
            return self._winning[0]
        mask = grid_for(self.composition).up_closure(self.smw)
        with _lock:
            if not self._winning:
                self._winning.append(mask)
        return self._winning[0]

    def __str__(self) -> str:
        rows = " ".join(",".join(map(str, s)) for s in self.smw)
        return f"{self.composition} S=[{rows}]"


def _from_trusted(composition: TypeComposition, smw, winning: int | None = None) -> CompleteSimpleGame:
    game = CompleteSimpleGame(composition, tuple(smw))
    if winning is not None:
        game._winning.append(winning)
    return game


def validate(composition, smw: Sequence[Sequence[int]]) -> CompleteSimpleGame:
    """Check the four characterization conditions and return the game.

    Raises the first violation found, checking bounds, incomparability,
    class separation and row order in that sequence.
    """
    if not isinstance(composition, TypeComposition):
        composition = TypeComposition(tuple(composition))
    rows = [tuple(int(x) for x in s) for s in smw]
    if not rows:
        raise ValidationError("a complete simple game needs at least one SMW row")
    parts = composition.parts
    t = composition.t
    for i, s in enumerate(rows, 1):
        if len(s) != t:
            raise BoundViolation(i, f"length {len(s)} != {t}")
        if not composition.contains(s):
            raise BoundViolation(i, f"{s} not within {parts}")
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            if not incomparable(rows[i], rows[j]):
                raise NotIncomparable(i + 1, j + 1)
    if t == 1:
        if rows[0][0] <= 0:
            raise ClassSeparationFailure(1)
    else:
        for j in range(t - 1):
            if not any(s[j] > 0 and s[j + 1] < parts[j + 1] for s in rows):
                raise ClassSeparationFailure(j + 1)
    for i in range(len(rows) - 1):
        if not lex_gtr(rows[i], rows[i + 1]):
            raise RowOrderViolation(i + 1)
    return CompleteSimpleGame(composition, tuple(rows))


def _grid_index(game: CompleteSimpleGame, s) -> int:
    return grid_for(game.composition).index(s)


def is_winning(game: CompleteSimpleGame, s: Sequence[int]) -> bool:
    s = game.composition.check(s)
    if game.composition.grid_size <= MEMO_GRID_LIMIT:
        return bool(game.winning_mask() >> _grid_index(game, s) & 1)
    return any(shift_leq(row, s) for row in game.smw)


def _losing_vectors(game: CompleteSimpleGame):
    grid = grid_for(game.composition)
    win = game.winning_mask()
    for idx, v in enumerate(grid.vectors):
        if not win >> idx & 1:
            yield idx, v


def maximal_losing(game: CompleteSimpleGame) -> list[Vector]:
    """Losing vectors that become winning when any single agent joins.

    This is the componentwise-maximal losing set. Rows come out in
    lexicographically decreasing order.
    """
    comp = game.composition
    out = []
    for _, a in _losing_vectors(game):
        ok = True
        for i in range(comp.t):
            if a[i] < comp.parts[i]:
                b = a[:i] + (a[i] + 1,) + a[i + 1:]
                if not is_winning(game, b):
                    ok = False
                    break
        if ok:
            out.append(a)
    return out


def shift_maximal_losing(game: CompleteSimpleGame) -> list[Vector]:
    """Losing vectors all of whose strict shift-successors are winning."""
    grid = grid_for(game.composition)
    win = game.winning_mask()
    return [
        v for idx, v in _losing_vectors(game)
        if all(win >> u & 1 for u in grid.upper[idx])
    ]


def sml_mask(game: CompleteSimpleGame) -> int:
    grid = grid_for(game.composition)
    win = game.winning_mask()
    out = 0
    losing = grid.full & ~win
    upper = grid.upper
    while losing:
        low = losing & -losing
        idx = low.bit_length() - 1
        if all(win >> u & 1 for u in upper[idx]):
            out |= low
        losing ^= low
    return out


def minimal_winning(game: CompleteSimpleGame) -> list[Vector]:
    """Winning vectors that turn losing when any single agent leaves."""
    out = []
    win = game.winning_mask()
    grid = grid_for(game.composition)
    for idx, a in enumerate(grid.vectors):
        if not win >> idx & 1:
            continue
        if all(
            not win >> grid.index(a[:i] + (a[i] - 1,) + a[i + 1:]) & 1
            for i in range(len(a)) if a[i] > 0
        ):
            out.append(a)
    return out


def smw_from_winning_predicate(composition, winning: Callable[[Vector], bool]) -> CompleteSimpleGame:
    """Recover the canonical game from a winning predicate on coalition vectors.

    The predicate is evaluated on the whole grid, checked to be
    shift-up-closed, and its shift-minimal elements become the SMW rows.
    """
    if not isinstance(composition, TypeComposition):
        composition = TypeComposition(tuple(composition))
    grid = grid_for(composition)
    table = [bool(winning(v)) for v in grid.vectors]
    if table[-1]:
        raise MonotonicityViolation("the empty coalition is winning")
    if not table[0]:
        raise MonotonicityViolation("the grand coalition is losing")
    for idx, v in enumerate(grid.vectors):
        if table[idx]:
            for u in grid.upper[idx]:
                if not table[u]:
                    raise MonotonicityViolation(
                        f"{v} is winning but its shift-successor {grid.vectors[u]} is losing")
    # a winning vector is shift-minimal iff it is no winning vector's one-step successor
    has_winning_lower = [False] * grid.size
    for idx in range(grid.size):
        if table[idx]:
            for u in grid.upper[idx]:
                has_winning_lower[u] = True
    rows = [v for idx, v in enumerate(grid.vectors) if table[idx] and not has_winning_lower[idx]]
    return validate(composition, rows)
