"""Exact simplex for small systems ``A z <= b, z >= 0``.

The tableau is fraction-free: each row is stored as a list of ints that
represents the true row up to a positive factor, and is reduced by its gcd
after every pivot. Entries are therefore exact rationals without the cost
of ``Fraction`` arithmetic on every operation.

Feasibility is found by the dual simplex on a zero objective, started from
the all-slack basis. When a row has negative right-hand side and no negative
entry left, its slack coefficients are a Farkas ray ``y >= 0`` with
``y A >= 0`` and ``y b < 0``. Bland's rule is used throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class LPError(RuntimeError):
    pass


@dataclass(frozen=True)
class LPResult:
    feasible: bool
    point: tuple[Fraction, ...] | None = None  # structural variables, when feasible
    farkas: tuple[Fraction, ...] | None = None  # one multiplier per constraint, when infeasible
    objective: Fraction | None = None
    pivots: int = 0


def _lcm_denominator(values) -> int:
    d = 1
    for v in values:
        if isinstance(v, Fraction):
            d = d * v.denominator // math.gcd(d, v.denominator)
    return d


class _Tableau:
    def __init__(self, A: Sequence[Sequence], b: Sequence):
        m = len(A)
        n = len(A[0]) if m else 0
        self.m, self.n = m, n
        rows = []
        for i, (a_row, rhs) in enumerate(zip(A, b)):
            if len(a_row) != n:
                raise ValueError("ragged constraint matrix")
            d = _lcm_denominator(list(a_row) + [rhs])
            row = [int(x * d) for x in a_row]
            row.extend(0 for _ in range(m))
            row[n + i] = d
            row.append(int(rhs * d))
            rows.append(row)
        self.rows = rows
        self.basis = [n + i for i in range(m)]
        self.width = n + m
        self.pivots = 0

    def pivot(self, r: int, c: int) -> None:
        rows = self.rows
        row = rows[r]
        if row[c] < 0:
            row = [-x for x in row]
        g = math.gcd(*row)
        if g > 1:
            row = [x // g for x in row]
        rows[r] = row
        p = row[c]
        for k in range(self.m):
            if k == r:
                continue
            other = rows[k]
            f = other[c]
            if f == 0:
                continue
            new = [p * x - f * y for x, y in zip(other, row)]
            g = math.gcd(*new)
            if g > 1:
                new = [x // g for x in new]
            rows[k] = new
        self.basis[r] = c
        self.pivots += 1

    def value(self, i: int) -> Fraction:
        row = self.rows[i]
        return Fraction(row[-1], row[self.basis[i]])

    def point(self) -> tuple[Fraction, ...]:
        z = [Fraction(0)] * self.n
        for i, var in enumerate(self.basis):
            if var < self.n:
                z[var] = self.value(i)
        return tuple(z)

    def dual_feasibility(self, max_pivots: int) -> int | None:
        """Drive every basic value non-negative; return an infeasible row or None."""
        while True:
            leaving = None
            for i, row in enumerate(self.rows):
                if row[-1] < 0 and (leaving is None or self.basis[i] < self.basis[leaving]):
                    leaving = i
            if leaving is None:
                return None
            row = self.rows[leaving]
            basic = set(self.basis)
            entering = next((j for j in range(self.width) if row[j] < 0 and j not in basic), None)
            if entering is None:
                return leaving
            if self.pivots >= max_pivots:
                raise LPError("pivot limit reached")
            self.pivot(leaving, entering)

    def minimize(self, c: Sequence, max_pivots: int) -> Fraction | None:
        """Primal simplex from a feasible basis; None if unbounded."""
        d = _lcm_denominator(c)
        cost = [int(x * d) for x in c] + [0] * self.m
        # reduced cost row: obj[j] / obj_den, with obj[-1] = -(objective value) * obj_den
        obj = cost + [0]
        den = 1
        for i, var in enumerate(self.basis):
            cv = obj[var]
            if cv:
                row = self.rows[i]
                p = row[var]
                obj = [p * x - cv * y for x, y in zip(obj, row)]
                den *= p
                g = math.gcd(den, *obj)
                obj = [x // g for x in obj]
                den //= g
        while True:
            basic = set(self.basis)
            entering = next((j for j in range(self.width) if obj[j] < 0 and j not in basic), None)
            if entering is None:
                return Fraction(-obj[-1], den * d)
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    if best is None:
                        best = i
                        continue
                    brow = self.rows[best]
                    lhs = row[-1] * brow[entering]
                    rhs = brow[-1] * a
                    if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[best]):
                        best = i
            if best is None:
                return None
            if self.pivots >= max_pivots:
                raise LPError("pivot limit reached")
            self.pivot(best, entering)
            row = self.rows[best]
            p = row[entering]
            f = obj[entering]
            obj = [p * x - f * y for x, y in zip(obj, row)]
            den *= p
            g = math.gcd(den, *obj)
            obj = [x // g for x in obj]
            den //= g


def solve_lp(A: Sequence[Sequence], b: Sequence, c: Sequence | None = None,
             max_pivots: int = 10_000) -> LPResult:
    """Decide ``A z <= b, z >= 0`` exactly; optionally minimise ``c z`` when feasible."""
    if len(A) != len(b):
        raise ValueError("A and b disagree on the number of constraints")
    tab = _Tableau(A, b)
    bad = tab.dual_feasibility(max_pivots)
    if bad is not None:
        row = tab.rows[bad]
        den = row[tab.basis[bad]]
        y = tuple(Fraction(row[tab.n + k], den) for k in range(tab.m))
        return LPResult(False, farkas=y, pivots=tab.pivots)
    objective = None
    if c is not None:
        objective = tab.minimize(c, max_pivots)
        if objective is None:
            raise LPError("objective is unbounded below")
    return LPResult(True, point=tab.point(), objective=objective, pivots=tab.pivots)
