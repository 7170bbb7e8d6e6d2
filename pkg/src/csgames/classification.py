"""Classification of type compositions as weighted or non-weighted.

A composition is weighted when every complete simple game with that
composition is weighted. Non-weighted verdicts always carry a game and a
certificate, found by enumeration, by extending the witness of a smaller
non-weighted composition with the same number of classes, or, for six or
more classes, from the alternating-column matrix over all-ones compositions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .constructions import StarFamily, extend
from .core import TypeComposition, Vector
from .enumeration import BudgetExceeded, Budget, compositions_of, survey_composition
from .game import CompleteSimpleGame, ValidationError, validate
from .weightedness import (
    COMPONENTWISE,
    SHIFT,
    Certificate,
    find_certificate,
    is_weighted,
)

WEIGHTED, NONWEIGHTED, UNKNOWN = "weighted", "nonweighted", "unknown"
BY_ENUMERATION, BY_DOMINATION, BY_MANY_TYPES = "enumeration", "domination", "t>=6 rule"

# Smallest non-weighted compositions found by exhaustive search up to 7 agents.
MINIMAL_NONWEIGHTED_T5 = tuple(TypeComposition(p) for p in [
    (2, 4), (2, 2, 2), (1, 1, 5), (1, 2, 3), (1, 3, 2), (2, 1, 4), (2, 4, 1),
    (1, 1, 1, 3), (1, 1, 3, 1), (2, 1, 2, 1), (2, 3, 1, 1), (1, 2, 2, 1),
    (1, 2, 1, 2), (1, 1, 2, 2), (1, 2, 1, 1, 1), (1, 1, 2, 1, 1),
    (1, 1, 1, 2, 1), (1, 1, 1, 1, 2),
])

WEIGHTED_FAMILIES = tuple(StarFamily.parse(s) for s in [
    "*", "1,*", "*,1", "*,2", "*,3", "*,1,1", "*,1,2", "*,1,3", "*,2,1", "*,3,1",
    "1,*,1", "*,1,1,1", "*,1,1,2", "*,2,1,1", "1,*,1,1", "*,1,1,1,1",
])
WEIGHTED_SPORADIC = tuple(TypeComposition(p) for p in [(1, 1, 4), (1, 2, 2), (1, 1, 2, 1)])

_SIX_TYPES = [
    (1, 1, 0, 0, 0, 0),
    (1, 0, 1, 0, 0, 1),
    (1, 0, 0, 1, 1, 0),
    (0, 1, 1, 1, 0, 0),
    (0, 0, 1, 1, 1, 1),
]


def many_types_game(t: int) -> CompleteSimpleGame:
    """The non-weighted game on ``t >= 6`` single-agent classes.

    Columns beyond the sixth alternate between (1,0,1,0,1) and (0,1,0,1,0).
    """
    if t < 6:
        raise ValueError("needs at least 6 classes")
    rows = []
    for i, base in enumerate(_SIX_TYPES):
        tail = tuple((i + k) % 2 == 0 and 1 or 0 for k in range(t - 6))
        rows.append(base + tail)
    return validate(TypeComposition((1,) * t), rows)


def corollary_weighted(composition: TypeComposition) -> bool:
    """Membership in the conjectured list of weighted families and sporadic cases."""
    if composition in WEIGHTED_SPORADIC:
        return True
    return any(f.star_value(composition) is not None for f in WEIGHTED_FAMILIES)


def conjectured_weighted(composition: TypeComposition) -> bool:
    """At most five classes and above none of the minimal non-weighted compositions."""
    if composition.t >= 6:
        return False
    return not any(composition.dominates(m) for m in MINIMAL_NONWEIGHTED_T5)


@dataclass(frozen=True)
class CompositionVerdict:
    composition: TypeComposition
    status: str
    basis: str
    witness: tuple[CompleteSimpleGame, Certificate] | None = None
    origin: TypeComposition | None = None  # the smaller composition a derived verdict came from
    games: int | None = None

    @property
    def weighted(self) -> bool:
        return self.status == WEIGHTED


def _certified(game: CompleteSimpleGame) -> tuple[CompleteSimpleGame, Certificate]:
    return game, find_certificate(game)


def classify_composition(composition, known: dict | None = None,
                         budget: Budget | None = None) -> CompositionVerdict:
    """Classify one composition.

    ``known`` maps compositions to earlier non-weighted verdicts; a known
    composition below this one (same number of classes) settles the verdict
    by extending its witness. On budget exhaustion the verdict is "unknown".
    """
    if not isinstance(composition, TypeComposition):
        composition = TypeComposition(tuple(composition))
    if composition.t >= 6:
        base = many_types_game(composition.t)
        game, cert = _certified(base)
        if composition != base.composition:
            game = extend(base, composition)
            origin = base.composition
        elif composition.t > 6:
            # the extra columns only repeat the six-class pattern
            origin = TypeComposition((1,) * 6)
        else:
            origin = None
        return CompositionVerdict(composition, NONWEIGHTED, BY_MANY_TYPES, (game, cert), origin)
    for other, verdict in (known or {}).items():
        if verdict.status == NONWEIGHTED and other != composition and composition.dominates(other):
            small_game, cert = verdict.witness
            game = extend(small_game, composition)
            return CompositionVerdict(composition, NONWEIGHTED, BY_DOMINATION, (game, cert), other)
    try:
        survey = survey_composition(composition, budget)
    except BudgetExceeded:
        return CompositionVerdict(composition, UNKNOWN, BY_ENUMERATION)
    if survey.first_nonweighted is None:
        return CompositionVerdict(composition, WEIGHTED, BY_ENUMERATION, games=survey.complete)
    return CompositionVerdict(composition, NONWEIGHTED, BY_ENUMERATION,
                              _certified(survey.first_nonweighted), games=survey.complete)


def classify_all(n_max: int, budget: Budget | None = None) -> dict[TypeComposition, CompositionVerdict]:
    """Verdicts for every composition with at most ``n_max`` agents, smallest totals first."""
    known: dict[TypeComposition, CompositionVerdict] = {}
    verdicts = {}
    for n in range(1, n_max + 1):
        for comp in compositions_of(n):
            v = classify_composition(comp, known, budget)
            verdicts[comp] = v
            if v.status == NONWEIGHTED:
                known[comp] = v
    return verdicts


def minimal_nonweighted(n_max: int, budget: Budget | None = None) -> list[TypeComposition]:
    """Non-weighted compositions not derived from a smaller non-weighted one.

    Derivation means componentwise domination with the same number of
    classes, or, beyond six classes, the column-extension of the six-class
    all-ones game. Sorted by total, then lexicographically.
    """
    verdicts = classify_all(n_max, budget)
    if any(v.status == UNKNOWN for v in verdicts.values()):
        raise BudgetExceeded("classification incomplete", verdicts)
    out = [c for c, v in verdicts.items() if v.status == NONWEIGHTED and v.origin is None]
    return sorted(out, key=lambda c: (c.n, c.parts))


@dataclass
class ConsistencyReport:
    n_max: int
    checked: int = 0
    counterexamples: list[TypeComposition] = field(default_factory=list)
    corollary_mismatches: list[TypeComposition] = field(default_factory=list)
    unknown: list[TypeComposition] = field(default_factory=list)
    domination_violations: list[tuple[TypeComposition, TypeComposition]] = field(default_factory=list)
    verdicts: dict = field(default_factory=dict, repr=False)

    @property
    def consistent(self) -> bool:
        return not (self.counterexamples or self.corollary_mismatches or self.domination_violations)

    def lines(self) -> list[str]:
        out = [f"checked {self.checked} compositions with at most {self.n_max} agents"]
        out.append(f"conjecture counterexamples: {len(self.counterexamples)}")
        out.append(f"corollary mismatches: {len(self.corollary_mismatches)}")
        out.append(f"domination violations: {len(self.domination_violations)}")
        if self.unknown:
            out.append(f"unknown (budget): {len(self.unknown)}")
        out.append("note: compositions with 6+ classes are settled by the t>=6 rule, "
                   "which the domination order cannot express")
        out.append("consistent" if self.consistent else "INCONSISTENT")
        return out


def conjecture_check(n_max: int, budget: Budget | None = None) -> ConsistencyReport:
    """Compare computed verdicts with the conjectured classification and its corollary."""
    verdicts = classify_all(n_max, budget)
    report = ConsistencyReport(n_max, verdicts=verdicts)
    for comp, v in verdicts.items():
        report.checked += 1
        if v.status == UNKNOWN:
            report.unknown.append(comp)
            continue
        if v.weighted != conjectured_weighted(comp):
            report.counterexamples.append(comp)
        if v.weighted != corollary_weighted(comp):
            report.corollary_mismatches.append(comp)
    for a, va in verdicts.items():
        if va.status != WEIGHTED:
            continue
        for b, vb in verdicts.items():
            if vb.status == NONWEIGHTED and a.dominates(b):
                report.domination_violations.append((a, b))
    return report


@dataclass(frozen=True)
class AppendixEntry:
    composition: tuple[int, ...]
    smw: tuple[Vector, ...]
    winning_rows: tuple[Vector, ...]
    losing_rows: tuple[Vector, ...]
    x: tuple[int, ...]
    y: tuple[int, ...]
    mode: str = COMPONENTWISE

    def game(self) -> CompleteSimpleGame:
        return validate(self.composition, self.smw)

    def certificate(self) -> Certificate:
        return Certificate(self.winning_rows, self.losing_rows,
                           tuple(map(Fraction, self.x)), tuple(map(Fraction, self.y)), self.mode)


def _entry(comp, smw, losing, x, y, winning=None, mode=COMPONENTWISE) -> AppendixEntry:
    return AppendixEntry(comp, tuple(smw), tuple(winning or smw), tuple(losing), tuple(x), tuple(y), mode)


APPENDIX = (
    _entry((2, 4), [(2, 0), (0, 4)], [(1, 2)], (1, 1), (2,)),
    _entry((2, 2, 2), [(2, 0, 0), (1, 2, 0), (0, 2, 2)], [(1, 1, 1)], (1, 0, 1), (2,)),
    _entry((1, 1, 5), [(1, 0, 2), (0, 1, 3)], [(1, 1, 0), (0, 0, 5)], (1, 1), (1, 1)),
    _entry((1, 2, 3), [(1, 1, 0), (0, 1, 3)], [(1, 0, 2), (0, 2, 1)], (1, 1), (1, 1)),
    _entry((1, 3, 2), [(1, 0, 2), (0, 3, 0)], [(1, 1, 0), (0, 2, 2)], (1, 1), (1, 1)),
    _entry((2, 1, 4), [(1, 0, 2), (0, 1, 3)], [(2, 0, 0), (0, 0, 4)], (2, 0), (1, 1)),
    _entry((2, 4, 1), [(2, 0, 1), (0, 4, 0)], [(1, 2, 1)], (1, 1), (2,)),
    _entry((1, 1, 1, 3), [(1, 0, 0, 2), (0, 1, 1, 1), (0, 1, 0, 3)],
           [(1, 1, 0, 0), (0, 0, 1, 3)], (1, 1, 0), (1, 1)),
    _entry((1, 1, 3, 1), [(1, 0, 1, 1), (0, 1, 2, 0)], [(1, 1, 0, 0), (0, 0, 3, 1)], (1, 1), (1, 1)),
    _entry((2, 1, 2, 1), [(1, 1, 0, 1), (1, 0, 2, 0)], [(2, 0, 0, 0), (0, 1, 2, 1)], (1, 1), (1, 1)),
    _entry((2, 3, 1, 1), [(1, 1, 0, 1), (0, 3, 1, 0)],
           [(2, 0, 0, 0), (1, 0, 1, 1), (0, 3, 0, 1)], (3,), (1, 1, 1),
           winning=[(1, 1, 0, 1)], mode=SHIFT),
    _entry((1, 2, 2, 1), [(1, 0, 1, 1), (0, 2, 1, 0)], [(1, 1, 0, 0), (0, 1, 2, 1)], (1, 1), (1, 1)),
    _entry((1, 2, 1, 2), [(1, 0, 0, 2), (0, 2, 1, 0), (0, 2, 0, 2)],
           [(1, 1, 0, 0), (0, 1, 1, 2)], (1, 1, 0), (1, 1)),
    _entry((1, 1, 2, 2), [(1, 0, 0, 2), (0, 1, 1, 1)],
           [(1, 1, 0, 0), (0, 1, 0, 2), (0, 0, 2, 2)], (1, 2), (1, 1, 1)),
    _entry((1, 2, 1, 1, 1), [(1, 1, 0, 0, 0), (1, 0, 1, 1, 0), (0, 2, 1, 0, 0), (0, 1, 1, 1, 1)],
           [(1, 0, 1, 0, 1), (0, 2, 0, 1, 0)], (1, 0, 0, 1), (1, 1)),
    _entry((1, 1, 2, 1, 1), [(1, 1, 0, 0, 0), (1, 0, 1, 1, 0), (0, 1, 2, 0, 0), (0, 0, 2, 1, 1)],
           [(1, 0, 1, 0, 1), (0, 1, 1, 1, 0)], (1, 0, 0, 1), (1, 1)),
    _entry((1, 1, 1, 2, 1), [(1, 1, 0, 0, 0), (1, 0, 1, 0, 1), (1, 0, 0, 2, 0), (0, 0, 1, 2, 1)],
           [(0, 1, 1, 1, 0), (1, 0, 0, 1, 1)], (1, 0, 0, 1), (1, 1)),
    _entry((1, 1, 1, 1, 2), [(1, 1, 0, 0, 0), (1, 0, 1, 0, 1), (0, 1, 1, 1, 0), (0, 0, 1, 1, 2)],
           [(1, 0, 0, 1, 1), (0, 1, 1, 0, 1)], (1, 0, 0, 1), (1, 1)),
)


@dataclass(frozen=True)
class SuiteResult:
    composition: tuple[int, ...]
    valid: bool
    losing_ok: bool
    certificate_ok: bool
    lp_nonweighted: bool
    problems: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.valid and self.losing_ok and self.certificate_ok and self.lp_nonweighted


@dataclass
class SuiteReport:
    results: list[SuiteResult]

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.results)

    @property
    def total(self) -> int:
        return len(self.results)

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            status = "pass" if r.passed else "FAIL"
            detail = "; ".join(r.problems)
            out.append(f"{status} {TypeComposition(r.composition)}" + (f"  {detail}" if detail else ""))
        out.append(f"{self.passed}/{self.total} passed")
        return out


def appendix_suite() -> SuiteReport:
    """Check every printed non-weighted example against its printed certificate."""
    from .game import is_winning
    from .weightedness import check_certificate

    results = []
    for entry in APPENDIX:
        problems = []
        try:
            game = entry.game()
        except ValidationError as exc:
            results.append(SuiteResult(entry.composition, False, False, False, False, (str(exc),)))
            continue
        losing_ok = not any(is_winning(game, r) for r in entry.losing_rows)
        if not losing_ok:
            problems.append("a printed losing row is winning")
        cert_problems = check_certificate(game, entry.certificate())
        problems.extend(cert_problems)
        lp_nonweighted = not is_weighted(game)
        if not lp_nonweighted:
            problems.append("LP finds the game weighted")
        results.append(SuiteResult(entry.composition, True, losing_ok, not cert_problems,
                                   lp_nonweighted, tuple(problems)))
    return SuiteReport(results)
