"""Artificial-free phase 1 for primal feasibility.

Infeasible basic rows are tagged ``x_i-`` and their sum is carried as an
extra objective row ``w``. Pricing and the two-sided ratio test follow the
textbook phase 1 exactly, so the pivot sequence matches a simplex run with
explicit artificial variables under the same tie rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .tableau import MINUS, PLAIN, PLUS, Dictionary, Label, corner_point, pivot, pivot_row
from .trace import (InvariantError, Outcome, PivotStep, PivotTrace, Run, Snapshot,
                    SolverOptions)


@dataclass
class AsmState:
    dict: Dictionary
    w: List[Fraction]
    trace: PivotTrace

    @property
    def L(self) -> frozenset:
        return frozenset(lab for lab in self.dict.basic if lab.tag == MINUS)

    @property
    def w0(self) -> Fraction:
        return self.w[0]


def feasibility_row(dic: Dictionary) -> List[Fraction]:
    """Column sums over the minus-tagged rows, recomputed from scratch."""
    w = [Fraction(0)] * (dic.n + 1)
    for r, lab in enumerate(dic.basic):
        if lab.tag == MINUS:
            w = [a + b for a, b in zip(w, dic.d[r + 1])]
    return w


def init_asm(dic: Dictionary) -> AsmState:
    if any(lab.tag != PLAIN for lab in dic.basic + dic.nonbasic):
        raise ValueError("initial dictionary must carry plain labels only")
    dic = dic.copy()
    dic.basic = [lab.with_tag(MINUS) if dic.d[r + 1][0] < 0 else lab
                 for r, lab in enumerate(dic.basic)]
    trace = PivotTrace("asm", start=corner_point(dic))
    state = AsmState(dic, feasibility_row(dic), trace)
    if not state.L:
        trace.outcome = Outcome.FEASIBLE
    return state


def select_entering(state: AsmState, bland: bool = False) -> Optional[Label]:
    """Most negative w entry (or the first negative one under ``bland``)."""
    best = None
    for s, lab in enumerate(state.dict.nonbasic):
        ws = state.w[s + 1]
        if ws >= 0:
            continue
        if best is None:
            best = (ws, lab)
            continue
        if bland:
            if lab.order < best[1].order:
                best = (ws, lab)
        elif ws < best[0] or (ws == best[0] and lab.order < best[1].order):
            best = (ws, lab)
    return None if best is None else best[1]


def select_leaving(state: AsmState, m: Label) -> Label:
    """Minimum ratio over feasible rows (entry > 0) and minus rows (entry < 0)."""
    dic = state.dict
    S = dic.nonbasic_position(m) + 1
    best = None
    for r, lab in enumerate(dic.basic):
        rhs, entry = dic.d[r + 1][0], dic.d[r + 1][S]
        if lab.tag == MINUS:
            admissible = rhs <= 0 and entry < 0
        else:
            admissible = rhs >= 0 and entry > 0
        if not admissible:
            continue
        ratio = rhs / entry
        if best is None or ratio < best[0] or (ratio == best[0] and lab.order < best[1].order):
            best = (ratio, lab)
    if best is None:
        raise InvariantError(f"no leaving row for entering column {m} with w < 0")
    return best[1]


def asm_step(state: AsmState, m: Label, r: Label, check: bool = True) -> AsmState:
    dic = state.dict
    rpos, spos = dic.basic_position(r), dic.nonbasic_position(m)
    R, S = rpos + 1, spos + 1
    p0 = dic.d[R][S]
    ratio = dic.d[R][0] / p0
    new = pivot(dic, rpos, spos)
    w = pivot_row(state.w, dic.d[R], S)
    leaving = new.nonbasic[spos]
    if leaving.tag == MINUS:
        # x_r- left: its column becomes the x_r+ column, which costs 1 more in w
        w[S] += 1
        new.nonbasic[spos] = leaving.with_tag(PLUS)
    trace = state.trace
    trace.steps.append(PivotStep(len(trace.steps) + 1, m, r, p0, corner_point(new), w[0]))
    out = AsmState(new, w, trace)
    if check:
        check_state(out)
        _check_monotone(state.w0, out.w0, ratio)
    if not out.L:
        trace.outcome = Outcome.FEASIBLE
    return out


def check_state(state: AsmState) -> None:
    dic = state.dict
    for r, lab in enumerate(dic.basic):
        v = dic.d[r + 1][0]
        if lab.tag == MINUS and v > 0:
            raise InvariantError(f"minus row {lab} has positive value {v}")
        if lab.tag != MINUS and v < 0:
            raise InvariantError(f"row {lab} outside L has negative value {v}")
    if any(lab.tag == MINUS for lab in dic.nonbasic):
        raise InvariantError("a minus-tagged label became nonbasic")
    if state.w != feasibility_row(dic):
        raise InvariantError("maintained w row disagrees with the recomputed column sums")


def _check_monotone(before: Fraction, after: Fraction, ratio: Fraction) -> None:
    if after > 0:
        raise InvariantError(f"w0 became positive: {after}")
    if ratio == 0 and after != before:
        raise InvariantError(f"degenerate pivot moved w0 from {before} to {after}")
    if ratio != 0 and not after > before:
        raise InvariantError(f"non-degenerate pivot failed to increase w0 ({before} -> {after})")


def asm_solve(dic: Dictionary, opts: SolverOptions = SolverOptions()) -> Run:
    state = init_asm(dic)
    trace = state.trace
    if opts.check_invariants:
        check_state(state)
    while True:
        trace.snapshots.append(Snapshot(state.dict, list(state.w) if state.L else None))
        if not state.L:
            trace.outcome = Outcome.FEASIBLE
            break
        m = select_entering(state, opts.bland)
        if m is None:
            if state.w0 == 0:
                # every remaining minus row sits at zero: the basis is feasible
                trace.outcome = Outcome.FEASIBLE
            else:
                trace.outcome = Outcome.INFEASIBLE
                trace.certificate = list(state.w)
            break
        if len(trace.steps) >= opts.max_iters:
            trace.outcome = Outcome.ITERATION_CAP
            break
        r = select_leaving(state, m)
        trace.snapshots[-1].pivot = (state.dict.basic_position(r), state.dict.nonbasic_position(m))
        state = asm_step(state, m, r, opts.check_invariants)
    return Run(trace, state.dict)
