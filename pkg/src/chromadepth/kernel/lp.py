"""Exact two-phase simplex method with Bland's anti-cycling rule."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .rational import Vec


class LPStatus(enum.Enum):
    OPTIMAL = "OPTIMAL"
    INFEASIBLE = "INFEASIBLE"
    UNBOUNDED = "UNBOUNDED"


@dataclass(frozen=True)
class LPResult:
    status: LPStatus
    optimum: Optional[Fraction] = None
    witness: Vec = field(default_factory=tuple)

    @property
    def optimal(self) -> bool:
        return self.status is LPStatus.OPTIMAL


ZERO = Fraction(0)


class _Tableau:
    """Dense tableau for ``max c.x  s.t.  A x = b, x >= 0`` with ``b >= 0``.

    Row ``i`` stores the constraint with basic variable ``basis[i]``; the last
    entry of each row is the right-hand side.
    """

    def __init__(self, rows: list[list[Fraction]], basis: list[int], nvars: int):
        self.rows = rows
        self.basis = basis
        self.nvars = nvars

    def pivot(self, r: int, c: int) -> None:
        row = self.rows[r]
        p = row[c]
        if p != 1:
            row = [x / p for x in row]
            self.rows[r] = row
        for i, other in enumerate(self.rows):
            if i != r:
                f = other[c]
                if f:
                    self.rows[i] = [x - f * y for x, y in zip(other, row)]
        self.basis[r] = c

    def reduced_costs(self, cost: Sequence[Fraction], allowed: Sequence[bool]) -> list[Fraction]:
        # reduced cost c_j - c_B B^-1 A_j, read off the current (already reduced) rows
        red = list(cost)
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[i]
                for j in range(self.nvars):
                    if row[j]:
                        red[j] -= cb * row[j]
        return [r if allowed[j] else ZERO for j, r in enumerate(red)]

    def run(self, cost: Sequence[Fraction], allowed: Sequence[bool]) -> bool:
        """Maximize ``cost``; returns False when the objective is unbounded."""
        while True:
            red = self.reduced_costs(cost, allowed)
            # Bland: smallest-index improving column
            entering = next((j for j in range(self.nvars) if red[j] > 0), None)
            if entering is None:
                return True
            best = None
            leave = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = row[-1] / a
                    if (best is None or ratio < best
                            or (ratio == best and self.basis[i] < self.basis[leave])):
                        best = ratio
                        leave = i
            if leave is None:
                return False
            self.pivot(leave, entering)

    def solution(self) -> list[Fraction]:
        x = [ZERO] * self.nvars
        for i, b in enumerate(self.basis):
            x[b] = self.rows[i][-1]
        return x


def simplex_standard(c: Sequence[Fraction], a_eq: Sequence[Sequence[Fraction]],
                     b_eq: Sequence[Fraction]) -> LPResult:
    """Solve ``max c.x  s.t.  a_eq x = b_eq, x >= 0`` exactly."""
    n = len(c)
    rows = []
    for row, rhs in zip(a_eq, b_eq):
        row = [Fraction(x) for x in row]
        rhs = Fraction(rhs)
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        rows.append((row, rhs))
    m = len(rows)
    total = n + m
    tab_rows = []
    for i, (row, rhs) in enumerate(rows):
        art = [ZERO] * m
        art[i] = Fraction(1)
        tab_rows.append(row + art + [rhs])
    tab = _Tableau(tab_rows, list(range(n, total)), total)

    phase1 = [ZERO] * n + [Fraction(-1)] * m
    tab.run(phase1, [True] * total)
    if any(tab.rows[i][-1] != 0 for i, b in enumerate(tab.basis) if b >= n):
        return LPResult(LPStatus.INFEASIBLE)

    # drive zero-level artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(tab.rows):
        if tab.basis[i] >= n:
            col = next((j for j in range(n) if tab.rows[i][j] != 0), None)
            if col is None:
                del tab.rows[i]
                del tab.basis[i]
                continue
            tab.pivot(i, col)
        i += 1

    cost = [Fraction(x) for x in c] + [ZERO] * m
    allowed = [True] * n + [False] * m
    if not tab.run(cost, allowed):
        return LPResult(LPStatus.UNBOUNDED)
    x = tab.solution()[:n]
    opt = sum((ci * xi for ci, xi in zip(cost, x)), ZERO)
    return LPResult(LPStatus.OPTIMAL, opt, tuple(x))


def linprog(c: Sequence, a_ub: Sequence[Sequence] = (), b_ub: Sequence = (),
            a_eq: Sequence[Sequence] = (), b_eq: Sequence = (),
            nonneg: Optional[Sequence[bool]] = None) -> LPResult:
    """Maximize ``c.x`` under ``a_ub x <= b_ub`` and ``a_eq x = b_eq``.

    Variables are free unless ``nonneg[j]`` is set.  Free variables are split
    into a difference of two non-negative ones; slacks turn inequalities into
    equalities.  The witness is reported in the original variables.
    """
    n = len(c)
    if nonneg is None:
        nonneg = [False] * n
    cols = []  # (original var, sign)
    for j in range(n):
        cols.append((j, 1))
        if not nonneg[j]:
            cols.append((j, -1))
    nstruct = len(cols)
    nslack = len(a_ub)
    width = nstruct + nslack

    def expand(row):
        return [Fraction(row[j]) * s for j, s in cols]

    a = []
    b = []
    for k, (row, rhs) in enumerate(zip(a_ub, b_ub)):
        slack = [ZERO] * nslack
        slack[k] = Fraction(1)
        a.append(expand(row) + slack)
        b.append(Fraction(rhs))
    for row, rhs in zip(a_eq, b_eq):
        a.append(expand(row) + [ZERO] * nslack)
        b.append(Fraction(rhs))
    cost = [Fraction(c[j]) * s for j, s in cols] + [ZERO] * nslack
    if not a:
        # no constraints at all: bounded only if the objective vanishes
        if any(x > 0 for x in cost):
            return LPResult(LPStatus.UNBOUNDED)
        return LPResult(LPStatus.OPTIMAL, ZERO, tuple(ZERO for _ in range(n)))
    res = simplex_standard(cost, a, b)
    if not res.optimal:
        return res
    x = [ZERO] * n
    for (j, s), val in zip(cols, res.witness[:width]):
        x[j] += s * val
    return LPResult(LPStatus.OPTIMAL, res.optimum, tuple(x))


def lp_min_coeff(points: Sequence[Sequence[Fraction]]) -> LPResult:
    """Maximize the smallest coefficient of a convex combination equal to 0.

    Solves ``max eps`` subject to ``sum_p lam_p p = 0``, ``sum_p lam_p = 1``
    and ``lam_p >= eps >= 0``.  INFEASIBLE means 0 is not in the convex hull;
    a positive optimum means 0 is in its relative interior; optimum 0 means 0
    sits on the relative boundary.  The witness is the vector ``lam``.
    """
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if not pts:
        return LPResult(LPStatus.INFEASIBLE)
    dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise ValueError("points of mixed dimension")
    k = len(pts)
    # variables: mu_0..mu_{k-1} (lam_p = mu_p + eps), eps
    a = []
    b = []
    for coord in range(dim):
        row = [p[coord] for p in pts]
        row.append(sum(row, ZERO))
        a.append(row)
        b.append(ZERO)
    a.append([Fraction(1)] * k + [Fraction(k)])
    b.append(Fraction(1))
    cost = [ZERO] * k + [Fraction(1)]
    res = simplex_standard(cost, a, b)
    if not res.optimal:
        return res
    eps = res.witness[k]
    lam = tuple(mu + eps for mu in res.witness[:k])
    return LPResult(LPStatus.OPTIMAL, eps, lam)
