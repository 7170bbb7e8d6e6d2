"""Weightedness of complete simple games, decided exactly and always witnessed.

A weighted game yields a :class:`WeightedRepresentation`; a non-weighted one
yields a :class:`Certificate`, i.e. winning rows and losing rows with
non-negative multipliers of equal 1-norm whose weighted sums contradict any
separating weighting.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Vector, leq, prefix_sums, shift_leq
from .game import (
    CompleteSimpleGame,
    is_winning,
    maximal_losing,
    minimal_winning,
    shift_maximal_losing,
)
from .lp import solve_lp

COMPONENTWISE = "componentwise"
SHIFT = "shift"


class CertificateSearchFailure(RuntimeError):
    pass


@dataclass(frozen=True)
class WeightedRepresentation:
    """Quota and one weight per class, non-increasing from the strongest class."""

    quota: Fraction
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        q = Fraction(self.quota)
        w = tuple(Fraction(x) for x in self.weights)
        if q <= 0:
            raise ValueError(f"quota must be positive, got {q}")
        if any(x < 0 for x in w):
            raise ValueError(f"weights must be non-negative, got {w}")
        if any(a < b for a, b in zip(w, w[1:])):
            raise ValueError(f"weights must be non-increasing, got {w}")
        object.__setattr__(self, "quota", q)
        object.__setattr__(self, "weights", w)

    def weight(self, s: Sequence[int]) -> Fraction:
        return sum((w * a for w, a in zip(self.weights, s)), Fraction(0))

    def scaled(self, factor) -> "WeightedRepresentation":
        factor = Fraction(factor)
        return WeightedRepresentation(self.quota * factor, tuple(w * factor for w in self.weights))

    def integral(self) -> "WeightedRepresentation":
        """Smallest positive multiple with coprime integer entries."""
        values = (self.quota,) + self.weights
        den = math.lcm(*(v.denominator for v in values))
        ints = [int(v * den) for v in values]
        g = math.gcd(*ints)
        return self.scaled(Fraction(den, g))

    def __str__(self) -> str:
        return "[" + str(self.quota) + ";" + ",".join(str(w) for w in self.weights) + "]"


@dataclass(frozen=True)
class Certificate:
    winning_rows: tuple[Vector, ...]
    losing_rows: tuple[Vector, ...]
    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]
    mode: str = COMPONENTWISE

    def __post_init__(self):
        object.__setattr__(self, "winning_rows", tuple(tuple(r) for r in self.winning_rows))
        object.__setattr__(self, "losing_rows", tuple(tuple(r) for r in self.losing_rows))
        object.__setattr__(self, "x", tuple(Fraction(v) for v in self.x))
        object.__setattr__(self, "y", tuple(Fraction(v) for v in self.y))
        if self.mode not in (COMPONENTWISE, SHIFT):
            raise ValueError(f"unknown certificate mode {self.mode!r}")

    def winning_sum(self) -> tuple[Fraction, ...]:
        return _combine(self.x, self.winning_rows)

    def losing_sum(self) -> tuple[Fraction, ...]:
        return _combine(self.y, self.losing_rows)

    def normalized(self) -> "Certificate":
        """Drop zero multipliers and scale to coprime integers."""
        x = [(c, r) for c, r in zip(self.x, self.winning_rows) if c != 0]
        y = [(c, r) for c, r in zip(self.y, self.losing_rows) if c != 0]
        values = [c for c, _ in x + y]
        if not values:
            return self
        den = math.lcm(*(v.denominator for v in values))
        g = math.gcd(*(int(v * den) for v in values))
        f = Fraction(den, g)
        return Certificate(
            tuple(r for _, r in x), tuple(r for _, r in y),
            tuple(c * f for c, _ in x), tuple(c * f for c, _ in y), self.mode)


@dataclass(frozen=True)
class Infeasible:
    """Outcome of :func:`solve_separation` for a non-weighted game.

    ``certificate`` is the shift-mode witness read off the Farkas ray of
    the separation system (SMW rows against SML rows).
    """

    certificate: Certificate


def _combine(coeffs, rows) -> tuple[Fraction, ...]:
    if not rows:
        return ()
    out = [Fraction(0)] * len(rows[0])
    for c, r in zip(coeffs, rows):
        for i, a in enumerate(r):
            out[i] += c * a
    return tuple(out)


def _farkas_certificate(farkas, win_rows, lose_rows, mode) -> Certificate:
    k = len(win_rows)
    x = list(farkas[:k])
    y = list(farkas[k:k + len(lose_rows)])
    sx, sy = sum(x), sum(y)
    if sy == 0:
        raise CertificateSearchFailure("Farkas ray puts no weight on losing rows")
    # the ray gives |x| >= |y| and x.S <= y.L; scaling y up keeps the dominance
    y = [v * sx / sy for v in y]
    return Certificate(win_rows, lose_rows, x, y, mode).normalized()


def _separation_system(game: CompleteSimpleGame, smw, sml):
    """Constraints in z = (d_1..d_t, q) with w_i = d_i + ... + d_t, so weights are ordered."""
    t = game.t
    A, b = [], []
    for s in smw:
        A.append([-p for p in prefix_sums(s)] + [1])
        b.append(0)
    for s in sml:
        A.append(list(prefix_sums(s)) + [-1])
        b.append(-1)
    A.append([0] * t + [-1])
    b.append(-1)
    return A, b


def _weights_from_increments(d) -> tuple[Fraction, ...]:
    w = list(itertools.accumulate(reversed(d)))
    return tuple(reversed(w))


def solve_separation(game: CompleteSimpleGame, canonical: bool = True):
    """Exactly solve the margin-1 separation system for ``game``.

    Returns a :class:`WeightedRepresentation` or :class:`Infeasible`. With
    ``canonical`` the representation minimises quota plus total class
    weight, which makes the output reproducible.
    """
    smw = list(game.smw)
    sml = shift_maximal_losing(game)
    A, b = _separation_system(game, smw, sml)
    c = None
    if canonical:
        c = [k + 1 for k in range(game.t)] + [1]
    res = solve_lp(A, b, c)
    if not res.feasible:
        return Infeasible(_farkas_certificate(res.farkas, smw, sml, SHIFT))
    d, q = res.point[:-1], res.point[-1]
    return WeightedRepresentation(q, _weights_from_increments(d))


def is_weighted(game: CompleteSimpleGame) -> bool:
    return isinstance(solve_separation(game, canonical=False), WeightedRepresentation)


def verify_representation(game: CompleteSimpleGame, rep: WeightedRepresentation) -> bool:
    """SMW rows meet the quota and SML rows fall strictly below it."""
    if len(rep.weights) != game.t:
        raise ValueError(f"{len(rep.weights)} weights for {game.t} classes")
    if any(rep.weight(s) < rep.quota for s in game.smw):
        return False
    return all(rep.weight(s) < rep.quota for s in shift_maximal_losing(game))


def find_certificate(game: CompleteSimpleGame) -> Certificate:
    """A componentwise certificate of non-weightedness.

    Winning rows are the componentwise-minimal winning vectors (SMW rows
    and their strengthening shifts) and losing rows the componentwise-maximal
    losing vectors. The multipliers come from the Farkas ray of the
    unordered separation system over those rows, with a bounded integer
    search as fallback.
    """
    win = minimal_winning(game)
    lose = maximal_losing(game)
    t = game.t
    A, b = [], []
    for s in win:
        A.append([-a for a in s] + [1])
        b.append(0)
    for s in lose:
        A.append(list(s) + [-1])
        b.append(-1)
    A.append([0] * t + [-1])
    b.append(-1)
    res = solve_lp(A, b)
    if not res.feasible:
        cert = _farkas_certificate(res.farkas, win, lose, COMPONENTWISE)
        if verify_certificate(game, cert):
            return cert
    cert = search_certificate(game)
    if cert is None:
        raise CertificateSearchFailure(f"no certificate found for {game}")
    return cert


def search_certificate(game: CompleteSimpleGame, max_norm: int = 6,
                       max_combinations: int = 200_000) -> Certificate | None:
    """Brute-force integer multipliers with equal 1-norm up to ``max_norm``."""
    win = minimal_winning(game)
    lose = maximal_losing(game)
    for k in range(1, max_norm + 1):
        losing_sums = {}
        for count, combo in enumerate(itertools.combinations_with_replacement(range(len(lose)), k)):
            if count > max_combinations:
                return None
            total = tuple(map(sum, zip(*(lose[i] for i in combo))))
            losing_sums.setdefault(total, combo)
        tops = _pareto_max(list(losing_sums))
        for count, combo in enumerate(itertools.combinations_with_replacement(range(len(win)), k)):
            if count > max_combinations:
                return None
            total = tuple(map(sum, zip(*(win[i] for i in combo))))
            for top in tops:
                if leq(total, top):
                    lcombo = losing_sums[top]
                    wrows = sorted(set(combo))
                    lrows = sorted(set(lcombo))
                    return Certificate(
                        tuple(win[i] for i in wrows), tuple(lose[i] for i in lrows),
                        tuple(combo.count(i) for i in wrows), tuple(lcombo.count(i) for i in lrows),
                        COMPONENTWISE).normalized()
    return None


def _pareto_max(points):
    points = sorted(set(points), reverse=True)
    out = []
    for p in points:
        if not any(leq(p, q) for q in out):
            out.append(p)
    return out


def check_certificate(game: CompleteSimpleGame, cert: Certificate) -> list[str]:
    """Reasons why ``cert`` fails to certify non-weightedness (empty if it holds)."""
    problems = []
    comp = game.composition
    if len(cert.x) != len(cert.winning_rows) or len(cert.y) != len(cert.losing_rows):
        return ["multiplier count does not match row count"]
    for r in cert.winning_rows:
        if not comp.contains(r):
            problems.append(f"winning row {r} is outside the grid")
        elif not is_winning(game, r):
            problems.append(f"row {r} is not winning")
    for r in cert.losing_rows:
        if not comp.contains(r):
            problems.append(f"losing row {r} is outside the grid")
        elif is_winning(game, r):
            problems.append(f"row {r} is not losing")
    if any(v < 0 for v in cert.x + cert.y):
        problems.append("negative multiplier")
    sx, sy = sum(cert.x, Fraction(0)), sum(cert.y, Fraction(0))
    if sx != sy:
        problems.append(f"1-norms differ: {sx} != {sy}")
    if sx <= 0:
        problems.append("1-norm of x must be positive")
    if problems:
        return problems
    a, b = cert.winning_sum(), cert.losing_sum()
    if cert.mode == COMPONENTWISE:
        if not leq(a, b):
            problems.append(f"x.S = {a} is not componentwise below y.L = {b}")
    elif not shift_leq(a, b):
        problems.append(f"x.S = {a} is not shift-below y.L = {b}")
    return problems


def verify_certificate(game: CompleteSimpleGame, cert: Certificate) -> bool:
    return not check_certificate(game, cert)


def witness(game: CompleteSimpleGame):
    """The weighted representation, or a componentwise certificate."""
    res = solve_separation(game)
    if isinstance(res, WeightedRepresentation):
        return res
    return find_certificate(game)
