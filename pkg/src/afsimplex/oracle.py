"""Classical phase 1 with explicit artificial variables.

This is deliberately a separate, textbook implementation: a full tableau
with a column for every original, slack and artificial variable, rows with
negative right-hand side negated so the artificials start basic at positive
values, and the phase-1 objective ``min sum(artificials)`` kept as a
reduced-cost row. It shares nothing with the dictionary pivot and is used
to check the artificial-free methods pivot for pivot.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from .tableau import ARTIFICIAL, MINUS, ORIGINAL, SLACK, Dictionary, Label, LinearProgram
from .trace import (InvariantError, Outcome, PivotStep, PivotTrace, Run, SolverOptions,
                    collapse)


@dataclass
class AuxiliaryProblem:
    """Phase-1 tableau ``T x = rhs`` over ``columns`` with ``basis[i]`` basic in row ``i``.

    ``cost`` holds the phase-1 reduced costs (last entry: minus the current
    objective value) and ``z`` the original objective row ``z - c^T x = 0``
    carried along for the final dictionary.
    """

    num_vars: int
    columns: List[Label]
    rows: List[List[Fraction]]
    rhs: List[Fraction]
    basis: List[int]
    cost: List[Fraction]
    z: List[Fraction]
    L0: List[int]
    redundant: List[int] = field(default_factory=list)

    @property
    def objective(self) -> Fraction:
        return -self.cost[-1]

    def artificial_sum(self) -> Fraction:
        return sum((self.rhs[i] for i, j in enumerate(self.basis)
                    if self.columns[j].kind == ARTIFICIAL), Fraction(0))

    def corner(self) -> tuple:
        x = [Fraction(0)] * self.num_vars
        for i, j in enumerate(self.basis):
            lab = self.columns[j]
            if lab.kind == ORIGINAL:
                x[lab.index - 1] = self.rhs[i]
        return tuple(x)


def build_auxiliary(lp: LinearProgram) -> AuxiliaryProblem:
    p, m = lp.num_vars, lp.num_rows
    L0 = [i for i in range(m) if lp.b[i] < 0]
    columns = [Label(ORIGINAL, j + 1) for j in range(p)]
    columns += [Label(SLACK, p + i + 1) for i in range(m)]
    columns += [Label(ARTIFICIAL, p + i + 1) for i in L0]
    width = len(columns)
    rows, rhs, basis = [], [], []
    for i in range(m):
        row = list(lp.A[i]) + [Fraction(int(k == i)) for k in range(m)] + [Fraction(0)] * len(L0)
        b = lp.b[i]
        if i in L0:
            row = [-v for v in row]
            b = -b
            art = p + m + L0.index(i)
            row[art] = Fraction(1)
            basis.append(art)
        else:
            basis.append(p + i)
        rows.append(row)
        rhs.append(b)
    # phase-1 costs: 1 on artificials, priced out against the artificial rows
    cost = [Fraction(0)] * (width + 1)
    for j in range(p + m, width):
        cost[j] = Fraction(1)
    for i in L0:
        for j in range(width):
            cost[j] -= rows[i][j]
        cost[-1] -= rhs[i]
    z = [-cj for cj in lp.c] + [Fraction(0)] * (width - p) + [Fraction(0)]
    return AuxiliaryProblem(p, columns, rows, rhs, basis, cost, z, L0)


def _gauss_jordan(aux: AuxiliaryProblem, r: int, q: int) -> None:
    piv = aux.rows[r][q]
    aux.rows[r] = [v / piv for v in aux.rows[r]]
    aux.rhs[r] = aux.rhs[r] / piv
    prow, prhs = aux.rows[r], aux.rhs[r]
    for i in range(len(aux.rows)):
        if i != r and aux.rows[i][q] != 0:
            f = aux.rows[i][q]
            aux.rows[i] = [a - f * b for a, b in zip(aux.rows[i], prow)]
            aux.rhs[i] -= f * prhs
    for vec in (aux.cost, aux.z):
        f = vec[q]
        if f != 0:
            for j, v in enumerate(prow):
                vec[j] -= f * v
            vec[-1] -= f * prhs
    aux.basis[r] = q


def _entering(aux: AuxiliaryProblem, bland: bool) -> Optional[int]:
    basic = set(aux.basis)
    best = None
    for j, lab in enumerate(aux.columns):
        # an artificial that has left the basis is never priced again
        if j in basic or lab.kind == ARTIFICIAL:
            continue
        rc = aux.cost[j]
        if rc >= 0:
            continue
        key = (lab.order,) if bland else (rc, lab.order)
        if best is None or key < best[0]:
            best = (key, j)
    return None if best is None else best[1]


def _leaving(aux: AuxiliaryProblem, q: int) -> Optional[int]:
    best = None
    for i, row in enumerate(aux.rows):
        if row[q] > 0:
            key = (aux.rhs[i] / row[q], aux.columns[aux.basis[i]].order)
            if best is None or key < best[0]:
                best = (key, i)
    return None if best is None else best[1]


def _drive_out(aux: AuxiliaryProblem) -> List[tuple]:
    """Pivot zero-valued artificials out of the basis; drop rows that cannot be."""
    moves = []
    for i in range(len(aux.rows) - 1, -1, -1):
        if aux.columns[aux.basis[i]].kind != ARTIFICIAL:
            continue
        basic = set(aux.basis)
        candidates = [j for j, lab in enumerate(aux.columns)
                      if j not in basic and lab.kind != ARTIFICIAL and aux.rows[i][j] != 0]
        if candidates:
            q = min(candidates, key=lambda j: aux.columns[j].order)
            moves.append((aux.columns[q], aux.columns[aux.basis[i]]))
            _gauss_jordan(aux, i, q)
        else:
            aux.redundant.append(aux.columns[aux.basis[i]].index)
            del aux.rows[i], aux.rhs[i], aux.basis[i]
    return moves


def final_dictionary(aux: AuxiliaryProblem) -> Dictionary:
    """Dictionary over the non-artificial columns (artificial rows, if any, kept as basic)."""
    basic_cols = set(aux.basis)
    nonbasic = [j for j, lab in enumerate(aux.columns)
                if j not in basic_cols and lab.kind != ARTIFICIAL]
    d = [[aux.z[-1]] + [aux.z[j] for j in nonbasic]]
    d += [[aux.rhs[i]] + [row[j] for j in nonbasic] for i, row in enumerate(aux.rows)]
    return Dictionary([aux.columns[j] for j in aux.basis],
                      [aux.columns[j] for j in nonbasic], d, aux.num_vars)


@dataclass
class OracleRun(Run):
    aux: Optional[AuxiliaryProblem] = None
    drive_out: List[tuple] = field(default_factory=list)


def simplex_phase1(aux: AuxiliaryProblem, opts: SolverOptions = SolverOptions()) -> OracleRun:
    """Dantzig pricing on the phase-1 row with the standard ratio test.

    Step ``w0`` values are the negated phase-1 objective so they line up with
    the artificial-free trace.
    """
    trace = PivotTrace("oracle", start=aux.corner())
    while True:
        if opts.check_invariants and aux.objective != aux.artificial_sum():
            raise InvariantError("phase-1 objective differs from the sum of artificials")
        q = _entering(aux, opts.bland)
        if q is None:
            break
        if len(trace.steps) >= opts.max_iters:
            trace.outcome = Outcome.ITERATION_CAP
            return OracleRun(trace, final_dictionary(aux), aux)
        r = _leaving(aux, q)
        if r is None:
            # sum of artificials is bounded below by 0
            raise InvariantError("phase-1 objective reported unbounded")
        piv = aux.rows[r][q]
        entering, leaving = aux.columns[q], aux.columns[aux.basis[r]]
        _gauss_jordan(aux, r, q)
        trace.steps.append(PivotStep(len(trace.steps) + 1, entering, leaving, piv,
                                     aux.corner(), -aux.objective))
    moves = []
    if aux.objective == 0:
        trace.outcome = Outcome.FEASIBLE
        moves = _drive_out(aux)
    else:
        trace.outcome = Outcome.INFEASIBLE
        trace.certificate = list(aux.cost)
    return OracleRun(trace, final_dictionary(aux), aux, moves)


def oracle_solve(lp: LinearProgram, opts: SolverOptions = SolverOptions()) -> OracleRun:
    return simplex_phase1(build_auxiliary(lp), opts)


def normalize_label(label: Label) -> str:
    """Common name for a pivot label: artificial ``a_i`` and ``x_i-`` coincide, ``x_i+`` is ``x_i``."""
    if label.kind == ARTIFICIAL or label.tag == MINUS:
        return f"x{label.index}-"
    return f"x{label.index}"


@dataclass
class PathReport:
    """Result of comparing two phase-1 paths.

    ``first_divergence`` indexes the visited-corner path (start point = 0)
    when the corners differ, otherwise the pivot list (first pivot = 0).
    """

    equal: bool
    first_divergence: Optional[int]
    corners_a: list
    corners_b: list
    pivots_a: Optional[list]
    pivots_b: Optional[list]


@dataclass
class CornerPath:
    """A path known only by its visited corners (e.g. a published path)."""

    points: Sequence[tuple]

    def corner_path(self):
        return collapse(self.points)


def _first_mismatch(a, b) -> Optional[int]:
    for k, (u, v) in enumerate(zip(a, b)):
        if u != v:
            return k
    if len(a) != len(b):
        return min(len(a), len(b))
    return None


def compare_paths(trace_a, trace_b) -> PathReport:
    corners_a, corners_b = trace_a.corner_path(), trace_b.corner_path()
    pivots_a = pivots_b = None
    if isinstance(trace_a, PivotTrace):
        pivots_a = [(normalize_label(e), normalize_label(l)) for e, l in trace_a.pivots]
    if isinstance(trace_b, PivotTrace):
        pivots_b = [(normalize_label(e), normalize_label(l)) for e, l in trace_b.pivots]
    divergence = _first_mismatch(corners_a, corners_b)
    if divergence is None and pivots_a is not None and pivots_b is not None:
        divergence = _first_mismatch(pivots_a, pivots_b)
    return PathReport(divergence is None, divergence, corners_a, corners_b, pivots_a, pivots_b)
