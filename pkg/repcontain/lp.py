"""Exact rational linear programming.

Problems are in standard equality form: maximize c.x subject to A x = b,
x >= 0. Two-phase tableau simplex over Fractions with Bland's rule, so it
cannot cycle and there are no tolerances anywhere.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence

from .errors import DomainError, InconsistencyError

logger = logging.getLogger(__name__)


class LPStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass
class LPProblem:
    A: List[List[Fraction]]
    b: List[Fraction]
    c: List[Fraction]

    def __post_init__(self):
        self.A = [[Fraction(v) for v in row] for row in self.A]
        self.b = [Fraction(v) for v in self.b]
        self.c = [Fraction(v) for v in self.c]
        if len(self.A) != len(self.b):
            raise DomainError(f"{len(self.A)} constraint rows but {len(self.b)} right-hand sides")
        if any(len(row) != len(self.c) for row in self.A):
            raise DomainError("Every constraint row needs one coefficient per variable")

    @property
    def num_vars(self) -> int:
        return len(self.c)


@dataclass
class LPResult:
    status: LPStatus
    value: Optional[Fraction] = None
    solution: Optional[List[Fraction]] = None
    dual: Optional[List[Fraction]] = None
    pivots: int = 0


@dataclass
class _Tableau:
    rows: List[List[Fraction]]
    rhs: List[Fraction]
    basis: List[int]
    pivots: int = field(default=0)

    def pivot(self, i: int, j: int):
        piv = self.rows[i][j]
        self.rows[i] = [v / piv for v in self.rows[i]]
        self.rhs[i] /= piv
        for k in range(len(self.rows)):
            if k != i and self.rows[k][j] != 0:
                f = self.rows[k][j]
                self.rows[k] = [a - f * p for a, p in zip(self.rows[k], self.rows[i])]
                self.rhs[k] -= f * self.rhs[i]
        self.basis[i] = j
        self.pivots += 1

    def reduced_cost(self, cost: Sequence[Fraction], j: int) -> Fraction:
        return cost[j] - sum(
            (cost[self.basis[i]] * self.rows[i][j] for i in range(len(self.rows))), Fraction(0)
        )

    def run(self, cost: Sequence[Fraction], allowed: int) -> LPStatus:
        """Maximize cost over the current basis; columns >= allowed never enter."""
        while True:
            basic = set(self.basis)
            entering = next(
                (j for j in range(allowed) if j not in basic and self.reduced_cost(cost, j) > 0),
                None,
            )
            if entering is None:
                return LPStatus.OPTIMAL
            leaving, best = None, None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    ratio = self.rhs[i] / row[entering]
                    if (
                        best is None
                        or ratio < best
                        or (ratio == best and self.basis[i] < self.basis[leaving])
                    ):
                        leaving, best = i, ratio
            if leaving is None:
                return LPStatus.UNBOUNDED
            self.pivot(leaving, entering)


def solve(problem: LPProblem) -> LPResult:
    m, nvar = len(problem.A), problem.num_vars
    signs = [(-1 if bi < 0 else 1) for bi in problem.b]
    rows = [
        [s * v for v in row] + [Fraction(int(k == i)) for k in range(m)]
        for i, (row, s) in enumerate(zip(problem.A, signs))
    ]
    tableau = _Tableau(rows, [s * bi for s, bi in zip(signs, problem.b)], [nvar + i for i in range(m)])

    # Phase 1: drive the artificial variables to zero
    phase1_cost = [Fraction(0)] * nvar + [Fraction(-1)] * m
    tableau.run(phase1_cost, nvar + m)
    if any(tableau.basis[i] >= nvar and tableau.rhs[i] != 0 for i in range(len(tableau.rows))):
        return LPResult(LPStatus.INFEASIBLE, pivots=tableau.pivots)

    # Pivot remaining (zero-level) artificials out; rows where that is impossible are redundant
    i = 0
    while i < len(tableau.rows):
        if tableau.basis[i] >= nvar:
            column = next((j for j in range(nvar) if tableau.rows[i][j] != 0), None)
            if column is None:
                del tableau.rows[i], tableau.rhs[i], tableau.basis[i]
                continue
            tableau.pivot(i, column)
        i += 1

    cost = list(problem.c) + [Fraction(0)] * m
    status = tableau.run(cost, nvar)
    if status is LPStatus.UNBOUNDED:
        return LPResult(LPStatus.UNBOUNDED, pivots=tableau.pivots)

    x = [Fraction(0)] * nvar
    for i, j in enumerate(tableau.basis):
        x[j] = tableau.rhs[i]
    value = sum((cj * xj for cj, xj in zip(problem.c, x)), Fraction(0))

    # Row multipliers live in the artificial block of the tableau
    dual = [Fraction(0)] * m
    for i, j in enumerate(tableau.basis):
        for k in range(m):
            dual[k] += cost[j] * tableau.rows[i][nvar + k]
    dual = [d * s for d, s in zip(dual, signs)]

    result = LPResult(LPStatus.OPTIMAL, value, x, dual, tableau.pivots)
    verify(problem, result)
    return result


def verify(problem: LPProblem, result: LPResult):
    """Substitute the reported optimum back; any failure is a solver bug."""
    x = result.solution
    if any(v < 0 for v in x):
        raise InconsistencyError("LP solution has a negative coordinate")
    for row, bi in zip(problem.A, problem.b):
        if sum((a * v for a, v in zip(row, x)), Fraction(0)) != bi:
            raise InconsistencyError("LP solution violates an equality constraint")
    if result.dual is not None:
        y = result.dual
        if sum((yi * bi for yi, bi in zip(y, problem.b)), Fraction(0)) != result.value:
            raise InconsistencyError("LP dual objective differs from the primal optimum")
        for j in range(problem.num_vars):
            if sum((y[i] * problem.A[i][j] for i in range(len(y))), Fraction(0)) < problem.c[j]:
                raise InconsistencyError(f"LP dual is infeasible in column {j}")
    logger.debug("LP optimum %s verified after %d pivots", result.value, result.pivots)
