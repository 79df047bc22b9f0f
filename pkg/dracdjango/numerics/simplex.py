# -*- coding: utf-8 -*-
"""Dense two-phase tableau simplex with Bland's anti-cycling rule.

Problems here are small (a few dozen variables), so the tableau is a dense
``numpy`` array and every pivot rewrites it in full.
"""
import logging
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from .exceptions import LpShapeError, NoConvergence

logger = logging.getLogger(__name__)

OPTIMAL = 'optimal'
INFEASIBLE = 'infeasible'
UNBOUNDED = 'unbounded'

PIVOT_TOL = 1e-9
FEASIBILITY_TOL = 1e-9
MAX_PIVOTS = 50000


@dataclass(frozen=True)
class LpProblem:
    """maximize c·x subject to A_eq x = b_eq, A_ub x ≤ b_ub and x ≥ 0."""
    objective: Tuple[float, ...]
    eq_rows: Tuple[Tuple[float, ...], ...] = ()
    eq_rhs: Tuple[float, ...] = ()
    ub_rows: Tuple[Tuple[float, ...], ...] = ()
    ub_rhs: Tuple[float, ...] = ()

    def __post_init__(self):
        n = len(self.objective)
        for rows, rhs, kind in ((self.eq_rows, self.eq_rhs, 'equality'), (self.ub_rows, self.ub_rhs, 'inequality')):
            if len(rows) != len(rhs):
                raise LpShapeError(
                    '{} {} rows but {} right-hand sides.'.format(len(rows), kind, len(rhs))
                    )
            for number, row in enumerate(rows):
                if len(row) != n:
                    raise LpShapeError(
                        '{} row {} has {} coefficients, expected {}.'.format(kind, number, len(row), n)
                        )

    @classmethod
    def build(cls, objective, eq_rows=(), eq_rhs=(), ub_rows=(), ub_rhs=()):
        def rows(values):
            return tuple(tuple(float(v) for v in row) for row in values)
        return cls(
            objective=tuple(float(v) for v in objective),
            eq_rows=rows(eq_rows),
            eq_rhs=tuple(float(v) for v in eq_rhs),
            ub_rows=rows(ub_rows),
            ub_rhs=tuple(float(v) for v in ub_rhs),
            )

    @property
    def n_vars(self):
        return len(self.objective)


@dataclass(frozen=True)
class LpSolution:
    status: str
    value: float = float('nan')
    x: Tuple[float, ...] = field(default=())

    @property
    def is_optimal(self):
        return self.status == OPTIMAL


def _pivot(tableau, row, col):
    tableau[row] /= tableau[row, col]
    for r in range(tableau.shape[0]):
        if r != row and tableau[r, col] != 0.0:
            tableau[r] -= tableau[r, col] * tableau[row]


def _iterate(tableau, basis, n_cols):
    """Pivot until no reduced cost in the last row is negative.

    The last row holds reduced costs ``c_B B⁻¹ A_j − c_j`` so a negative
    entry marks an improving column. Returns False when unbounded.
    """
    m = tableau.shape[0] - 1
    for _ in range(MAX_PIVOTS):
        costs = tableau[-1, :n_cols]
        candidates = np.flatnonzero(costs < -PIVOT_TOL)
        if candidates.size == 0:
            return True
        col = int(candidates[0])
        best = None
        for row in range(m):
            entry = tableau[row, col]
            if entry > PIVOT_TOL:
                key = (tableau[row, -1] / entry, basis[row])
                if best is None or key < best[0]:
                    best = (key, row)
        if best is None:
            return False
        row = best[1]
        _pivot(tableau, row, col)
        basis[row] = col
    raise NoConvergence('Simplex did not terminate after {} pivots.'.format(MAX_PIVOTS))


def _standard_form(problem):
    n = problem.n_vars
    n_ub = len(problem.ub_rows)
    a_rows = []
    b = []
    for row, rhs in zip(problem.eq_rows, problem.eq_rhs):
        a_rows.append(list(row) + [0.0] * n_ub)
        b.append(rhs)
    for k, (row, rhs) in enumerate(zip(problem.ub_rows, problem.ub_rhs)):
        slack = [0.0] * n_ub
        slack[k] = 1.0
        a_rows.append(list(row) + slack)
        b.append(rhs)
    a = np.array(a_rows, dtype=float).reshape(len(a_rows), n + n_ub)
    b = np.array(b, dtype=float)
    c = np.concatenate([np.array(problem.objective, dtype=float), np.zeros(n_ub)])
    negative = b < 0
    a[negative] *= -1
    b[negative] *= -1
    return a, b, c


def lp_maximize(problem):
    """Solve ``problem`` and return an :class:`LpSolution`.

    Infeasible and unbounded problems are reported through the status, they
    never raise.
    """
    a, b, c = _standard_form(problem)
    m, n = a.shape

    if m == 0:
        if np.any(c > PIVOT_TOL):
            return LpSolution(UNBOUNDED)
        return LpSolution(OPTIMAL, 0.0, tuple([0.0] * problem.n_vars))

    # Phase one: artificial basis, maximize minus their sum.
    tableau = np.zeros((m + 1, n + m + 1))
    tableau[:m, :n] = a
    tableau[:m, n:n + m] = np.eye(m)
    tableau[:m, -1] = b
    tableau[-1, :n] = -a.sum(axis=0)
    tableau[-1, -1] = -b.sum()
    basis = list(range(n, n + m))
    _iterate(tableau, basis, n + m)

    if tableau[-1, -1] < -FEASIBILITY_TOL * max(1.0, float(b.max(initial=0.0))):
        logger.debug('LP infeasible, phase one residual %.3e', -tableau[-1, -1])
        return LpSolution(INFEASIBLE)

    # Drive remaining artificials out of the basis, dropping redundant rows.
    row = 0
    while row < len(basis):
        if basis[row] >= n:
            columns = np.flatnonzero(np.abs(tableau[row, :n]) > PIVOT_TOL)
            if columns.size:
                _pivot(tableau, row, int(columns[0]))
                basis[row] = int(columns[0])
            else:
                tableau = np.delete(tableau, row, axis=0)
                del basis[row]
                continue
        row += 1

    # Phase two on the original columns.
    tableau = np.delete(tableau, np.s_[n:n + m], axis=1)
    costs = c[basis]
    tableau[-1, :n] = costs @ tableau[:-1, :n] - c
    tableau[-1, -1] = costs @ tableau[:-1, -1]
    if not _iterate(tableau, basis, n):
        return LpSolution(UNBOUNDED)

    x = np.zeros(n)
    for row, var in enumerate(basis):
        x[var] = tableau[row, -1]
    value = float(c @ x)
    return LpSolution(OPTIMAL, value, tuple(float(v) for v in x[:problem.n_vars]))
