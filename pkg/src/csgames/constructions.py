"""Building games from other games, and the candidate-row apparatus for star families.

``extend`` embeds a game into a larger composition so that certificates of
non-weightedness carry over. A :class:`StarFamily` is a set of compositions
that agree everywhere except at one unbounded position; its candidate set
contains every row an SMW matrix of a family member can have, once the
free parameters are assigned with :func:`assign_parameters`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .core import TypeComposition, Vector, leq, shift_leq
from .enumeration import Budget, BudgetExceeded, enumerate_games, game_is_weighted
from .game import CompleteSimpleGame, smw_from_winning_predicate, validate
from .weightedness import Certificate, WeightedRepresentation, find_certificate

STAR = "*"


def extend(game: CompleteSimpleGame, target) -> CompleteSimpleGame:
    """Embed ``game`` into the larger composition ``target``.

    Winning vectors of the result are exactly the shift-up-closure of the
    original winning vectors; everything else is losing.
    """
    if not isinstance(target, TypeComposition):
        target = TypeComposition(tuple(target))
    if target.t != game.t:
        raise ValueError(f"cannot extend {game.t} classes to {target.t}")
    if not leq(game.composition.parts, target.parts):
        raise ValueError(f"target {target} is not componentwise above {game.composition}")
    rows = game.smw
    return smw_from_winning_predicate(target, lambda s: any(shift_leq(r, s) for r in rows))


@dataclass(frozen=True)
class StarFamily:
    """Compositions equal to ``slots`` with the single ``None`` slot free."""

    slots: tuple[int | None, ...]

    def __post_init__(self):
        slots = tuple(None if s in (None, STAR) else int(s) for s in self.slots)
        if sum(s is None for s in slots) != 1:
            raise ValueError(f"a star family needs exactly one star slot, got {slots}")
        if any(s is not None and s < 1 for s in slots):
            raise ValueError(f"fixed slots must be positive, got {slots}")
        object.__setattr__(self, "slots", slots)

    @classmethod
    def parse(cls, text: str) -> "StarFamily":
        body = text.strip().strip("()").replace("★", STAR)
        return cls(tuple(None if p.strip() == STAR else int(p) for p in body.split(",")))

    @property
    def t(self) -> int:
        return len(self.slots)

    @property
    def star_index(self) -> int:
        return self.slots.index(None)

    @property
    def prefix(self) -> tuple[int, ...]:
        return self.slots[: self.star_index]

    @property
    def suffix(self) -> tuple[int, ...]:
        return self.slots[self.star_index + 1:]

    @property
    def fixed_total(self) -> int:
        return sum(s for s in self.slots if s is not None)

    def instantiate(self, star: int) -> TypeComposition:
        return TypeComposition(tuple(star if s is None else s for s in self.slots))

    def with_total(self, n: int) -> TypeComposition:
        star = n - self.fixed_total
        if star < 1:
            raise ValueError(f"{self} has no member with {n} agents")
        return self.instantiate(star)

    def star_value(self, composition: TypeComposition) -> int | None:
        """The star value if ``composition`` belongs to the family, else None."""
        if composition.t != self.t:
            return None
        for s, p in zip(self.slots, composition.parts):
            if s is not None and s != p:
                return None
        return composition.parts[self.star_index]

    def __str__(self) -> str:
        return "(" + ",".join(STAR if s is None else str(s) for s in self.slots) + ")"


@dataclass(frozen=True)
class CandidateVector:
    """The row ``(prefix, m[parameter] - offset, suffix)`` with a symbolic star entry."""

    prefix: tuple[int, ...]
    parameter: int
    offset: int
    suffix: tuple[int, ...]

    def realize(self, params: dict[int, int]) -> Vector | None:
        m = params.get(self.parameter, -1)
        if m < 0:
            return None
        return self.prefix + (m - self.offset,) + self.suffix

    def __str__(self) -> str:
        star = f"m{self.parameter}" + (f"-{self.offset}" if self.offset else "")
        return "(" + ",".join([*map(str, self.prefix), star, *map(str, self.suffix)]) + ")"


def tau(prefix: Sequence[int], family: StarFamily) -> int:
    """Mixed-radix number of a prefix over the classes before the star."""
    sizes = family.prefix
    value = 0
    for a, size in zip(prefix, sizes):
        value = value * (size + 1) + a
    return value


def parameter_count(family: StarFamily) -> int:
    return math.prod(size + 1 for size in family.prefix)


def star_slack(family: StarFamily) -> int:
    """Largest offset below the star parameter a candidate can have."""
    return sum(family.suffix)


def candidate_set(family: StarFamily) -> list[CandidateVector]:
    lam = star_slack(family)
    out = []
    for a in itertools.product(*(range(size + 1) for size in family.prefix)):
        for c in range(lam + 1):
            for b in itertools.product(*(range(size + 1) for size in family.suffix)):
                out.append(CandidateVector(a, tau(a, family), c, b))
    return out


def candidate_count_bound(family: StarFamily) -> int:
    """The printed size bound: (sum of fixed classes) * prod(fixed class + 1).

    It is not a valid upper bound for every family, e.g. (*,3) has 16
    candidates against a bound of 12, so callers report it beside the true
    size rather than asserting it.
    """
    fixed = [s for s in family.slots if s is not None]
    return sum(fixed) * math.prod(s + 1 for s in fixed)


def assign_parameters(game: CompleteSimpleGame, family: StarFamily) -> dict[int, int]:
    """For each prefix, the largest star entry among SMW rows with that prefix, or -1."""
    if family.star_value(game.composition) is None:
        raise ValueError(f"{game.composition} is not a member of {family}")
    i = family.star_index
    params = {}
    for a in itertools.product(*(range(size + 1) for size in family.prefix)):
        entries = [s[i] for s in game.smw if s[:i] == a]
        params[tau(a, family)] = max(entries) if entries else -1
    return params


def candidate_misses(game: CompleteSimpleGame, family: StarFamily,
                     params: dict[int, int] | None = None) -> list[Vector]:
    """SMW rows that match no candidate under the parameter assignment."""
    if params is None:
        params = assign_parameters(game, family)
    i = family.star_index
    lam = star_slack(family)
    misses = []
    for s in game.smw:
        m = params.get(tau(s[:i], family), -1)
        if not (m >= 0 and 0 <= m - s[i] <= lam):
            misses.append(s)
    return misses


@dataclass
class FamilyEntry:
    star: int
    composition: TypeComposition
    complete: int = 0
    weighted: int = 0
    candidate_misses: int = 0
    witness: tuple[CompleteSimpleGame, Certificate] | None = None


@dataclass
class FamilyReport:
    family: StarFamily
    candidates: int
    bound: int
    entries: list[FamilyEntry] = field(default_factory=list)
    truncated: bool = False

    @property
    def all_weighted(self) -> bool:
        return all(e.complete == e.weighted for e in self.entries)


def family_check(family: StarFamily, star_values, budget: Budget | None = None) -> FamilyReport:
    """Enumerate every member for the given star values and test weightedness.

    Each enumerated game is also checked against the candidate set. If the
    budget runs out the report is returned with ``truncated`` set.
    """
    report = FamilyReport(family, len(candidate_set(family)), candidate_count_bound(family))
    for k in star_values:
        if k < 1:
            raise ValueError("star values must be positive")
        comp = family.instantiate(k)
        entry = FamilyEntry(k, comp)
        report.entries.append(entry)
        try:
            for game in enumerate_games(comp, budget):
                entry.complete += 1
                if game_is_weighted(game):
                    entry.weighted += 1
                elif entry.witness is None:
                    entry.witness = (game, find_certificate(game))
                if candidate_misses(game, family):
                    entry.candidate_misses += 1
        except BudgetExceeded:
            report.truncated = True
            break
    return report


def _rep(q, *w) -> WeightedRepresentation:
    return WeightedRepresentation(Fraction(q), tuple(Fraction(x) for x in w))


def closed_form_cases(family: StarFamily, star: int) -> Iterator[tuple[str, CompleteSimpleGame, WeightedRepresentation]]:
    """Sub-case games of the two-class families with their explicit representations.

    Supported families: (*), (1,*), (*,1), (*,2), (*,3). Yields
    ``(label, game, representation)`` for every admissible parameter value.
    """
    key = str(family)
    comp = family.instantiate(star)
    n1 = comp.parts[0]

    def game(*rows):
        return validate(comp, rows)

    if key == "(*)":
        for m0 in range(1, n1 + 1):
            yield "S1", game((m0,)), _rep(m0, 1)
    elif key == "(1,*)":
        n2 = comp.parts[1]
        for m1 in range(0, n2):
            yield "S1", game((1, m1)), _rep(n2 + 1, n2 + 1 - m1, 1)
        for m1 in range(0, n2 + 1):
            for m0 in range(m1 + 2, n2 + 1):
                yield "S2", game((1, m1), (0, m0)), _rep(m0, m0 - m1, 1)
    elif key == "(*,1)":
        for m0 in range(1, n1 + 1):
            yield "S1", game((m0, 0)), _rep(m0, 1, 0)
    elif key == "(*,2)":
        for m0 in range(1, n1 + 1):
            yield "S1", game((m0, 0)), _rep(m0, 1, 0)
            yield "S2", game((m0, 1)), _rep(2 * m0 + 1, 2, 1)
            yield "S3", game((m0, 0), (m0 - 1, 2)), _rep(2 * m0, 2, 1)
    elif key == "(*,3)":
        for m0 in range(1, n1 + 1):
            yield "S1", game((m0, 0)), _rep(m0, 1, 0)
            yield "S2", game((m0, 1)), _rep(3 * m0 + 1, 3, 1)
            yield "S3", game((m0, 2)), _rep(3 * m0 + 4, 3, 2)
            yield "S4", game((m0, 0), (m0 - 1, 2)), _rep(2 * m0, 2, 1)
            yield "S5", game((m0, 0), (m0 - 1, 3)), _rep(3 * m0, 3, 1)
            yield "S6", game((m0, 1), (m0 - 1, 3)), _rep(2 * m0 + 1, 2, 1)
            if m0 >= 2:
                yield "S7", game((m0, 0), (m0 - 2, 3)), _rep(3 * m0, 3, 2)
    else:
        raise ValueError(f"no closed-form representations for {family}")
