"""Exhaustive generation and counting of complete simple games.

Games are generated as antichains of the shift order, rows added in
lexicographically decreasing order. Every antichain that also separates
all adjacent classes is exactly one game up to isomorphism, so no
isomorphism test is needed.
"""

from __future__ import annotations

import itertools
import logging
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from .core import TypeComposition
from .game import CompleteSimpleGame, _from_trusted, sml_mask
from .grid import grid_for
from .lp import solve_lp
from .weightedness import _separation_system

log = logging.getLogger(__name__)

ALL, WEIGHTED, NONWEIGHTED = "all", "weighted", "nonweighted"


class BudgetExceeded(RuntimeError):
    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


@dataclass
class Budget:
    seconds: float | None = None
    started: float = field(default_factory=time.monotonic)

    def check(self, partial=None) -> None:
        if self.seconds is not None and time.monotonic() - self.started > self.seconds:
            raise BudgetExceeded(f"time budget of {self.seconds}s exceeded", partial)


@dataclass(frozen=True)
class EnumerationTask:
    scope: int | TypeComposition
    filter: str = ALL
    budget_seconds: float | None = None

    def __post_init__(self):
        if self.filter not in (ALL, WEIGHTED, NONWEIGHTED):
            raise ValueError(f"unknown filter {self.filter!r}")
        if isinstance(self.scope, int) and self.scope < 1:
            raise ValueError("agent count must be at least 1")

    def compositions(self) -> list[TypeComposition]:
        if isinstance(self.scope, TypeComposition):
            return [self.scope]
        return compositions_of(self.scope)


def compositions_of(n: int) -> list[TypeComposition]:
    """All ordered compositions of ``n``, sorted lexicographically."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out = []
    for cuts in itertools.product((0, 1), repeat=n - 1):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return [TypeComposition(p) for p in sorted(out)]


def enumerate_games(composition: TypeComposition, budget: Budget | None = None
                    ) -> Iterator[CompleteSimpleGame]:
    """Every complete simple game with this composition, once, in a fixed order."""
    if not isinstance(composition, TypeComposition):
        composition = TypeComposition(tuple(composition))
    grid = grid_for(composition)
    inc = grid.incomparable_masks
    up = grid.up_masks
    sep = grid.sep_bits
    goal = grid.sep_goal
    vectors = grid.vectors
    produced = 0

    def descend(rows, cand, covered, win):
        nonlocal produced
        if covered == goal:
            produced += 1
            if budget is not None and produced % 1024 == 0:
                budget.check(produced)
            yield _from_trusted(composition, [vectors[i] for i in rows], win)
        while cand:
            low = cand & -cand
            cand ^= low
            j = low.bit_length() - 1
            rows.append(j)
            yield from descend(rows, cand & inc[j], covered | sep[j], win | up[j])
            rows.pop()

    start = grid.full
    while start:
        low = start & -start
        start ^= low
        j = low.bit_length() - 1
        yield from descend([j], start & inc[j], sep[j], up[j])


def game_is_weighted(game: CompleteSimpleGame) -> bool:
    """Feasibility-only weightedness test used by the counting loops."""
    grid = grid_for(game.composition)
    sml = grid.members(sml_mask(game))
    A, b = _separation_system(game, game.smw, sml)
    return solve_lp(A, b).feasible


def filtered_games(task: EnumerationTask) -> Iterator[CompleteSimpleGame]:
    budget = Budget(task.budget_seconds)
    for comp in task.compositions():
        for game in enumerate_games(comp, budget):
            if task.filter == ALL:
                yield game
            elif game_is_weighted(game) == (task.filter == WEIGHTED):
                yield game


@dataclass(frozen=True)
class CompositionSurvey:
    composition: TypeComposition
    complete: int
    weighted: int
    first_nonweighted: CompleteSimpleGame | None = None


def _survey(composition: TypeComposition, budget: Budget | None) -> CompositionSurvey:
    complete = weighted = 0
    first = None
    for game in enumerate_games(composition, budget):
        complete += 1
        if game_is_weighted(game):
            weighted += 1
        elif first is None:
            first = game
    return CompositionSurvey(composition, complete, weighted, first)


_surveys: dict[TypeComposition, CompositionSurvey] = {}


def survey_composition(composition: TypeComposition, budget: Budget | None = None) -> CompositionSurvey:
    """Counts of complete and weighted games for one composition, memoised per process."""
    hit = _surveys.get(composition)
    if hit is None:
        hit = _surveys[composition] = _survey(composition, budget)
    return hit


@dataclass
class CountReport:
    n: int
    per_composition: dict[TypeComposition, tuple[int, int]] = field(default_factory=dict)
    elapsed: float = 0.0
    truncated: bool = False

    @property
    def complete(self) -> int:
        return sum(c for c, _ in self.per_composition.values())

    @property
    def weighted(self) -> int:
        return sum(w for _, w in self.per_composition.values())

    def summary(self) -> str:
        return f"complete={self.complete} weighted={self.weighted}"


def _survey_counts(comp: TypeComposition) -> tuple[TypeComposition, int, int]:
    s = _survey(comp, None)
    return comp, s.complete, s.weighted


def read_checkpoint(path: Path) -> dict[TypeComposition, tuple[int, int]]:
    done = {}
    if path.exists():
        for line in path.read_text().splitlines():
            if not line.strip():
                continue
            comp, complete, weighted = line.split()
            done[TypeComposition(tuple(int(x) for x in comp.split(",")))] = (int(complete), int(weighted))
    return done


def count_games(n: int, budget: Budget | None = None, jobs: int = 1,
                checkpoint: Path | str | None = None) -> CountReport:
    """Count complete and weighted games with ``n`` agents over all compositions.

    With ``checkpoint`` every finished composition is appended to a text
    file as ``parts complete weighted``, and compositions already listed
    there are not recomputed.
    """
    started = time.monotonic()
    report = CountReport(n)
    comps = compositions_of(n)
    done = {}
    ckpt = None
    if checkpoint is not None:
        ckpt = Path(checkpoint)
        done = read_checkpoint(ckpt)
    todo = [c for c in comps if c not in done]

    def record(comp, complete, weighted):
        report.per_composition[comp] = (complete, weighted)
        if ckpt is not None and comp not in done:
            with ckpt.open("a") as fh:
                fh.write(f"{','.join(map(str, comp.parts))} {complete} {weighted}\n")
        log.info("%s complete=%d weighted=%d", comp, complete, weighted)

    try:
        if jobs > 1 and len(todo) > 1:
            from multiprocessing import Pool

            with Pool(jobs) as pool:
                for comp, complete, weighted in pool.imap(_survey_counts, todo):
                    record(comp, complete, weighted)
                    if budget is not None:
                        budget.check(report)
        else:
            for comp in todo:
                s = survey_composition(comp, budget)
                record(comp, s.complete, s.weighted)
    except BudgetExceeded as exc:
        report.truncated = True
        report.elapsed = time.monotonic() - started
        raise BudgetExceeded(str(exc), report) from None
    for comp in comps:
        if comp in done:
            report.per_composition[comp] = done[comp]
    report.per_composition = {c: report.per_composition[c] for c in comps}
    report.elapsed = time.monotonic() - started
    return report


def count_weighted_by_family(family, n: int) -> int:
    """Number of weighted games with ``n`` agents whose composition lies in ``family``."""
    comp = family.with_total(n)
    return survey_composition(comp).weighted
