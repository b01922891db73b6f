"""Exact rational linear programming by two-phase simplex with Bland's rule.

Every mixed-dominance decision in this package is a boolean claim hinging on
strict-versus-weak inequalities, so the solver works entirely in
`fractions.Fraction`; there is no tolerance anywhere.  Callers never encode a
strict inequality directly: they maximize a margin variable and test the exact
optimum against zero.

Bland's pivoting rule (lowest eligible index enters; lowest basic index leaves
among minimum-ratio ties) guarantees termination; a generous pivot cap guards
against implementation bugs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DimensionMismatch, PivotLimitExceeded

ZERO = Fraction(0)
ONE = Fraction(1)

MAX_PIVOTS = 200_000

LE, EQ, GE = "<=", "==", ">="


@dataclass(frozen=True)
class LinearConstraint:
    coeffs: tuple[Fraction, ...]
    op: str  # one of <=, ==, >=
    rhs: Fraction

    def satisfied_by(self, point: Sequence[Fraction]) -> bool:
        lhs = sum((c * x for c, x in zip(self.coeffs, point)), ZERO)
        if self.op == LE:
            return lhs <= self.rhs
        if self.op == GE:
            return lhs >= self.rhs
        return lhs == self.rhs


def constraint(coeffs, op: str, rhs) -> LinearConstraint:
    if op not in (LE, EQ, GE):
        raise DimensionMismatch(f"unknown constraint operator {op!r}")
    return LinearConstraint(tuple(Fraction(c) for c in coeffs), op, Fraction(rhs))


@dataclass(frozen=True)
class LpProblem:
    num_vars: int
    constraints: tuple[LinearConstraint, ...]
    objective: tuple[Fraction, ...]
    sense: str  # "max" or "min"
    nonneg: tuple[bool, ...]  # per-variable x >= 0 flag; False means free

    def __post_init__(self):
        if self.sense not in ("max", "min"):
            raise DimensionMismatch(f"sense must be max or min, got {self.sense!r}")
        if len(self.objective) != self.num_vars:
            raise DimensionMismatch("objective length != variable count")
        if len(self.nonneg) != self.num_vars:
            raise DimensionMismatch("nonneg flags length != variable count")
        for con in self.constraints:
            if len(con.coeffs) != self.num_vars:
                raise DimensionMismatch("constraint length != variable count")


def problem(num_vars, constraints, objective, sense="max", nonneg=None) -> LpProblem:
    if nonneg is None:
        nonneg = [True] * num_vars
    return LpProblem(
        num_vars,
        tuple(constraints),
        tuple(Fraction(c) for c in objective),
        sense,
        tuple(bool(b) for b in nonneg),
    )


@dataclass(frozen=True)
class LpOutcome:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Optional[Fraction] = None
    point: Optional[tuple[Fraction, ...]] = None

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


class _Tableau:
    """Dense exact simplex tableau: rows of structural+artificial columns
    plus rhs, kept in canonical (identity on basis) form."""

    def __init__(self, rows: list[list[Fraction]], basis: list[int]):
        self.rows = rows
        self.basis = basis
        self.pivots = 0

    def pivot(self, r: int, c: int) -> None:
        self.pivots += 1
        if self.pivots > MAX_PIVOTS:
            raise PivotLimitExceeded(f"more than {MAX_PIVOTS} simplex pivots")
        row = self.rows[r]
        piv = row[c]
        inv = ONE / piv
        self.rows[r] = [v * inv for v in row]
        row = self.rows[r]
        for k, other in enumerate(self.rows):
            if k == r:
                continue
            factor = other[c]
            if factor:
                self.rows[k] = [a - factor * b for a, b in zip(other, row)]
        self.basis[r] = c

    def minimize(self, cost: list[Fraction]) -> list[Fraction]:
        """Run Bland simplex on the given cost vector (min).  ``cost`` has one
        entry per tableau column except rhs, plus a trailing objective cell.
        Returns the reduced cost row at optimality; raises _Unbounded with the
        entering column otherwise."""
        if not self.rows:
            for j in range(len(cost) - 1):
                if cost[j] < ZERO:
                    raise _Unbounded(j)
            return cost[:]
        # canonicalize: zero out the basic columns of the cost row
        ncols = len(self.rows[0]) - 1
        red = cost[:]
        for r, b in enumerate(self.basis):
            factor = red[b]
            if factor:
                row = self.rows[r]
                for k in range(ncols + 1):
                    red[k] -= factor * row[k]
        while True:
            enter = -1
            for j in range(ncols):
                if red[j] < ZERO:
                    enter = j
                    break
            if enter < 0:
                return red
            leave = -1
            best: Optional[Fraction] = None
            for r, row in enumerate(self.rows):
                a = row[enter]
                if a > ZERO:
                    ratio = row[-1] / a
                    if best is None or ratio < best or (ratio == best and self.basis[r] < self.basis[leave]):
                        best = ratio
                        leave = r
            if leave < 0:
                raise _Unbounded(enter)
            self.pivot(leave, enter)
            factor = red[enter]
            if factor:
                row = self.rows[leave]
                for k in range(ncols + 1):
                    red[k] -= factor * row[k]


class _Unbounded(Exception):
    def __init__(self, column: int):
        self.column = column


def solve(prob: LpProblem) -> LpOutcome:
    """Exact optimum of the problem; the returned point is re-verified against
    every constraint before the outcome is handed back."""
    minimize = prob.sense == "min"
    obj = list(prob.objective) if minimize else [-c for c in prob.objective]

    # map original variables to standard (nonnegative) columns
    col_of: list[tuple[int, Optional[int]]] = []
    ncols = 0
    for flag in prob.nonneg:
        if flag:
            col_of.append((ncols, None))
            ncols += 1
        else:
            col_of.append((ncols, ncols + 1))
            ncols += 2

    std_cost = [ZERO] * ncols
    for j, (p, q) in enumerate(col_of):
        std_cost[p] += obj[j]
        if q is not None:
            std_cost[q] -= obj[j]

    rows: list[list[Fraction]] = []
    n_slack = sum(1 for con in prob.constraints if con.op != EQ)
    total = ncols + n_slack
    slack_at = ncols
    for con in prob.constraints:
        row = [ZERO] * total
        for j, (p, q) in enumerate(col_of):
            row[p] += con.coeffs[j]
            if q is not None:
                row[q] -= con.coeffs[j]
        if con.op == LE:
            row[slack_at] = ONE
            slack_at += 1
        elif con.op == GE:
            row[slack_at] = -ONE
            slack_at += 1
        row.append(con.rhs)
        if row[-1] < ZERO:
            row = [-v for v in row]
        rows.append(row)

    m = len(rows)
    # phase 1: artificial basis
    art_base = total
    for r, row in enumerate(rows):
        rhs = row.pop()
        row.extend(ONE if k == r else ZERO for k in range(m))
        row.append(rhs)
    basis = [art_base + r for r in range(m)]
    tab = _Tableau(rows, basis)
    phase1_cost = [ZERO] * art_base + [ONE] * m + [ZERO]
    try:
        red = tab.minimize(phase1_cost)
    except _Unbounded:  # pragma: no cover - phase 1 objective is bounded below by 0
        raise AssertionError("phase 1 cannot be unbounded")
    if -red[-1] != ZERO:  # objective cell holds -value
        return LpOutcome("infeasible")

    # drive artificials out of the basis, dropping redundant rows
    keep: list[int] = []
    for r in range(len(tab.rows)):
        if tab.basis[r] >= art_base:
            piv = next((j for j in range(art_base) if tab.rows[r][j] != ZERO), None)
            if piv is None:
                continue  # redundant constraint row
            tab.pivot(r, piv)
        keep.append(r)
    tab.rows = [tab.rows[r] for r in keep]
    tab.basis = [tab.basis[r] for r in keep]
    # chop artificial columns
    for r in range(len(tab.rows)):
        tab.rows[r] = tab.rows[r][:art_base] + [tab.rows[r][-1]]

    phase2_cost = std_cost + [ZERO] * n_slack + [ZERO]
    try:
        tab.minimize(phase2_cost)
    except _Unbounded:
        return LpOutcome("unbounded")

    std_point = [ZERO] * art_base
    for r, b in enumerate(tab.basis):
        std_point[b] = tab.rows[r][-1]
    point = []
    for p, q in col_of:
        v = std_point[p]
        if q is not None:
            v -= std_point[q]
        point.append(v)
    value = sum((c * x for c, x in zip(prob.objective, point)), ZERO)
    for con in prob.constraints:
        if not con.satisfied_by(point):  # pragma: no cover - internal consistency guard
            raise AssertionError(f"simplex returned a point violating {con}")
    for j, flag in enumerate(prob.nonneg):
        if flag and point[j] < ZERO:  # pragma: no cover
            raise AssertionError("simplex returned a negative value for a nonnegative variable")
    return LpOutcome("optimal", value, tuple(point))


def feasible_point(constraints, num_vars: int, nonneg=None) -> LpOutcome:
    """Phase-one feasibility: Optimal with value 0 and a witness point iff the
    system has a solution."""
    prob = problem(num_vars, constraints, [ZERO] * num_vars, "min", nonneg)
    out = solve(prob)
    if out.status != "optimal":
        return out
    return LpOutcome("optimal", ZERO, out.point)
