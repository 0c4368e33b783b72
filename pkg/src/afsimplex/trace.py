"""Pivot traces shared by the primal, dual and oracle phase-1 solvers."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .tableau import Dictionary, Label

DEFAULT_MAX_ITERS = 10_000


class Outcome(enum.Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    DUAL_FEASIBLE = "dual-feasible"
    DUAL_INFEASIBLE = "dual-infeasible"
    ITERATION_CAP = "iteration-cap"


class InvariantError(AssertionError):
    """A solver invariant was violated; this is always an internal fault."""


@dataclass(frozen=True)
class SolverOptions:
    max_iters: int = DEFAULT_MAX_ITERS
    # smallest-index entering choice instead of most-negative pricing
    bland: bool = False
    check_invariants: bool = True


@dataclass(frozen=True)
class PivotStep:
    iteration: int
    entering: Label
    leaving: Label
    pivot_value: Fraction
    corner: Tuple[Fraction, ...]
    w0: Fraction


@dataclass
class Snapshot:
    """A dictionary as printed before the next pivot.

    ``aux`` is the w row (primal method), the w' column (dual method) or
    None once the tracked set is empty. ``pivot`` is the (row, column)
    position starred in the table, if another pivot follows.
    """

    dictionary: Dictionary
    aux: Optional[List[Fraction]] = None
    pivot: Optional[Tuple[int, int]] = None


@dataclass
class PivotTrace:
    method: str
    start: Tuple[Fraction, ...] = ()
    steps: List[PivotStep] = field(default_factory=list)
    outcome: Optional[Outcome] = None
    certificate: Optional[List[Fraction]] = None
    snapshots: List[Snapshot] = field(default_factory=list)

    def __len__(self):
        return len(self.steps)

    @property
    def pivots(self):
        return [(st.entering, st.leaving) for st in self.steps]

    def corners(self) -> List[Tuple[Fraction, ...]]:
        """Start point followed by the corner after every pivot."""
        return [tuple(self.start)] + [st.corner for st in self.steps]

    def corner_path(self) -> List[Tuple[Fraction, ...]]:
        """Visited corners with repeats from degenerate pivots collapsed."""
        return collapse(self.corners())


def collapse(points) -> list:
    out = []
    for pt in points:
        pt = tuple(pt)
        if not out or out[-1] != pt:
            out.append(pt)
    return out


@dataclass
class Run:
    """Result of a solve: the trace plus the last dictionary reached."""

    trace: PivotTrace
    dictionary: Dictionary

    @property
    def outcome(self) -> Outcome:
        return self.trace.outcome
