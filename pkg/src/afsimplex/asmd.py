"""Artificial-free phase 1 for dual feasibility.

Nonbasic columns with a negative objective entry are the infeasible dual
slacks ``y_k-``. Their negated column sum is carried as an extra right-hand
column ``w'``; rows are priced on ``w'`` and the column is chosen by a
two-sided maximum-ratio test on the objective row, mirroring the primal
method row-for-column.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .tableau import MINUS, PLAIN, PLUS, Dictionary, Label, corner_point, pivot, pivot_column
from .trace import (InvariantError, Outcome, PivotStep, PivotTrace, Run, Snapshot,
                    SolverOptions)


@dataclass
class AsmdState:
    dict: Dictionary
    w_prime: List[Fraction]
    trace: PivotTrace

    @property
    def K(self) -> frozenset:
        return frozenset(lab for lab in self.dict.nonbasic if lab.tag == MINUS)


def feasibility_column(dic: Dictionary) -> List[Fraction]:
    """``-sum`` of the minus-tagged columns, row 0 included."""
    w = [Fraction(0)] * (dic.m + 1)
    for s, lab in enumerate(dic.nonbasic):
        if lab.tag == MINUS:
            w = [a - row[s + 1] for a, row in zip(w, dic.d)]
    return w


def init_asmd(dic: Dictionary) -> AsmdState:
    if any(lab.tag != PLAIN for lab in dic.basic + dic.nonbasic):
        raise ValueError("initial dictionary must carry plain labels only")
    dic = dic.copy()
    dic.nonbasic = [lab.with_tag(MINUS) if dic.d[0][s + 1] < 0 else lab
                    for s, lab in enumerate(dic.nonbasic)]
    trace = PivotTrace("asmd", start=corner_point(dic))
    state = AsmdState(dic, feasibility_column(dic), trace)
    if not state.K:
        trace.outcome = Outcome.DUAL_FEASIBLE
    return state


def select_leaving_row(state: AsmdState, bland: bool = False) -> Optional[Label]:
    best = None
    for r, lab in enumerate(state.dict.basic):
        wr = state.w_prime[r + 1]
        if wr >= 0:
            continue
        if best is None:
            best = (wr, lab)
        elif bland:
            if lab.order < best[1].order:
                best = (wr, lab)
        elif wr < best[0] or (wr == best[0] and lab.order < best[1].order):
            best = (wr, lab)
    return None if best is None else best[1]


def select_entering_col(state: AsmdState, r: Label) -> Label:
    """Maximum of ``d0j / drj`` over plain columns with ``drj < 0`` and minus columns with ``drj > 0``."""
    dic = state.dict
    R = dic.basic_position(r) + 1
    best = None
    for s, lab in enumerate(dic.nonbasic):
        top, entry = dic.d[0][s + 1], dic.d[R][s + 1]
        if lab.tag == MINUS:
            admissible = top <= 0 and entry > 0
        else:
            admissible = top >= 0 and entry < 0
        if not admissible:
            continue
        ratio = top / entry
        if best is None or ratio > best[0] or (ratio == best[0] and lab.order < best[1].order):
            best = (ratio, lab)
    if best is None:
        raise InvariantError(f"no entering column for row {r} with w' < 0")
    return best[1]


def asmd_step(state: AsmdState, r: Label, m: Label, check: bool = True) -> AsmdState:
    dic = state.dict
    rpos, spos = dic.basic_position(r), dic.nonbasic_position(m)
    R, S = rpos + 1, spos + 1
    p0 = dic.d[R][S]
    new = pivot(dic, rpos, spos)
    w = pivot_column(state.w_prime, [row[S] for row in dic.d], R)
    entered = new.basic[rpos]
    if entered.tag == MINUS:
        # y_m- became basic: its row loses the -1 it contributed to w'
        w[R] += 1
        new.basic[rpos] = entered.with_tag(PLUS)
    trace = state.trace
    trace.steps.append(PivotStep(len(trace.steps) + 1, m, r, p0, corner_point(new), w[0]))
    out = AsmdState(new, w, trace)
    if check:
        check_state(out)
    if not out.K:
        trace.outcome = Outcome.DUAL_FEASIBLE
    return out


def check_state(state: AsmdState) -> None:
    dic = state.dict
    for s, lab in enumerate(dic.nonbasic):
        v = dic.d[0][s + 1]
        if lab.tag == MINUS and v > 0:
            raise InvariantError(f"minus column {lab} has positive objective entry {v}")
        if lab.tag != MINUS and v < 0:
            raise InvariantError(f"column {lab} outside K has negative objective entry {v}")
    if any(lab.tag == MINUS for lab in dic.basic):
        raise InvariantError("a minus-tagged label became basic")
    if state.w_prime != feasibility_column(dic):
        raise InvariantError("maintained w' column disagrees with the recomputed sums")


def asmd_solve(dic: Dictionary, opts: SolverOptions = SolverOptions()) -> Run:
    state = init_asmd(dic)
    trace = state.trace
    if opts.check_invariants:
        check_state(state)
    while True:
        trace.snapshots.append(Snapshot(state.dict, list(state.w_prime) if state.K else None))
        if not state.K:
            trace.outcome = Outcome.DUAL_FEASIBLE
            break
        r = select_leaving_row(state, opts.bland)
        if r is None:
            if state.w_prime[0] == 0:
                # the remaining minus columns all have a zero objective entry
                trace.outcome = Outcome.DUAL_FEASIBLE
            else:
                # raising every K column by one keeps x_B >= old x_B and lifts z by w'_0 > 0
                trace.outcome = Outcome.DUAL_INFEASIBLE
                trace.certificate = list(state.w_prime)
            break
        if len(trace.steps) >= opts.max_iters:
            trace.outcome = Outcome.ITERATION_CAP
            break
        m = select_entering_col(state, r)
        trace.snapshots[-1].pivot = (state.dict.basic_position(r), state.dict.nonbasic_position(m))
        state = asmd_step(state, r, m, opts.check_invariants)
    return Run(trace, state.dict)
