"""Simplex dictionaries D(B) in the ``[z -c^T; b A]`` layout.

Row 0 is the objective row and column 0 the right-hand side. A basic row
``i`` reads ``x_i + sum_j d[i][j] x_j = d[i][0]``, so the basic solution is
column 0 with every nonbasic variable at zero.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from .exact import as_rational

ORIGINAL = "original"
SLACK = "slack"
ARTIFICIAL = "artificial"

PLAIN = ""
MINUS = "-"
PLUS = "+"

_SUPERSCRIPT = {PLAIN: "", MINUS: "⁻", PLUS: "⁺"}


class PivotError(ValueError):
    pass


@dataclass(frozen=True)
class Label:
    """Variable identity.

    ``index`` is the global variable number: originals are ``1..p`` and the
    slack (or artificial) of row ``i`` is ``p + i``. The tag marks the x-/x+
    half of an unrestricted slack (or y-/y+ in the dual method).
    """

    kind: str
    index: int
    tag: str = PLAIN

    def __post_init__(self):
        if self.kind not in (ORIGINAL, SLACK, ARTIFICIAL):
            raise ValueError(f"unknown label kind {self.kind!r}")
        if self.tag not in (PLAIN, MINUS, PLUS):
            raise ValueError(f"unknown sign tag {self.tag!r}")

    @property
    def order(self) -> int:
        """Position in the global tie-break order (originals, then slacks)."""
        return self.index

    @property
    def identity(self):
        return (self.kind, self.index)

    def with_tag(self, tag: str) -> "Label":
        return Label(self.kind, self.index, tag)

    def plain(self) -> "Label":
        return self.with_tag(PLAIN)

    def __str__(self):
        if self.kind == ARTIFICIAL:
            return f"a{self.index}"
        return f"x{self.index}{self.tag}"

    def pretty(self, prefix: str = "x") -> str:
        if self.kind == ARTIFICIAL:
            return f"a{self.index}"
        return f"{prefix}{self.index}{_SUPERSCRIPT[self.tag]}"

    @classmethod
    def parse(cls, text: str, num_vars: int) -> "Label":
        """Inverse of ``str``; ``num_vars`` separates originals from slacks."""
        text = text.strip()
        if text.startswith("a") and text[1:].isdigit():
            return cls(ARTIFICIAL, int(text[1:]))
        tag = PLAIN
        if text.endswith((MINUS, PLUS)):
            tag, text = text[-1], text[:-1]
        if not (text.startswith("x") and text[1:].isdigit()):
            raise ValueError(f"malformed label {text!r}")
        index = int(text[1:])
        if index < 1:
            raise ValueError(f"label index must be positive: {text!r}")
        return cls(ORIGINAL if index <= num_vars else SLACK, index, tag)


def original(j: int) -> Label:
    return Label(ORIGINAL, j)


def slack(num_vars: int, i: int) -> Label:
    """Slack of row ``i`` (1-based)."""
    return Label(SLACK, num_vars + i)


@dataclass
class LinearProgram:
    """``max c^T x  s.t.  A x <= b,  x >= 0`` with exact data."""

    c: List[Fraction]
    A: List[List[Fraction]]
    b: List[Fraction]
    var_names: Optional[List[str]] = None

    def __post_init__(self):
        self.c = [as_rational(v) for v in self.c]
        self.A = [[as_rational(v) for v in row] for row in self.A]
        self.b = [as_rational(v) for v in self.b]
        p = len(self.c)
        if len(self.A) != len(self.b):
            raise ValueError(f"A has {len(self.A)} rows but b has {len(self.b)} entries")
        for i, row in enumerate(self.A):
            if len(row) != p:
                raise ValueError(f"row {i + 1} of A has {len(row)} entries, expected {p}")
        if self.var_names is None:
            self.var_names = [f"x{j + 1}" for j in range(p)]
        self.var_names = list(self.var_names)
        if len(self.var_names) != p:
            raise ValueError("one name per variable is required")
        if len(set(self.var_names)) != p:
            raise ValueError("variable names must be unique")

    @property
    def num_vars(self) -> int:
        return len(self.c)

    @property
    def num_rows(self) -> int:
        return len(self.b)


@dataclass
class Dictionary:
    basic: List[Label]
    nonbasic: List[Label]
    d: List[List[Fraction]]
    num_vars: int = field(default=0)

    def __post_init__(self):
        if len(self.d) != len(self.basic) + 1:
            raise ValueError("dictionary needs one row per basic label plus the objective row")
        for row in self.d:
            if len(row) != len(self.nonbasic) + 1:
                raise ValueError("dictionary needs one column per nonbasic label plus the rhs")
        seen = [lab.identity for lab in self.basic + self.nonbasic]
        if len(seen) != len(set(seen)):
            raise ValueError("a label may appear only once in a dictionary")

    @property
    def m(self) -> int:
        return len(self.basic)

    @property
    def n(self) -> int:
        return len(self.nonbasic)

    @property
    def objective_value(self) -> Fraction:
        return self.d[0][0]

    def copy(self) -> "Dictionary":
        return Dictionary(list(self.basic), list(self.nonbasic),
                          [list(row) for row in self.d], self.num_vars)

    def basic_position(self, label: Label) -> int:
        for r, lab in enumerate(self.basic):
            if lab.identity == label.identity:
                return r
        raise KeyError(f"{label} is not basic")

    def nonbasic_position(self, label: Label) -> int:
        for s, lab in enumerate(self.nonbasic):
            if lab.identity == label.identity:
                return s
        raise KeyError(f"{label} is not nonbasic")

    def entry(self, row_label: Label, col_label: Label) -> Fraction:
        return self.d[self.basic_position(row_label) + 1][self.nonbasic_position(col_label) + 1]

    def values(self) -> dict:
        """Basic solution keyed by label identity (nonbasic variables at 0)."""
        out = {lab.identity: Fraction(0) for lab in self.nonbasic}
        for r, lab in enumerate(self.basic):
            out[lab.identity] = self.d[r + 1][0]
        return out


def build_dictionary(lp: LinearProgram) -> Dictionary:
    p = lp.num_vars
    basic = [slack(p, i + 1) for i in range(lp.num_rows)]
    nonbasic = [original(j + 1) for j in range(p)]
    d = [[Fraction(0)] + [-cj for cj in lp.c]]
    d += [[bi] + list(row) for bi, row in zip(lp.b, lp.A)]
    return Dictionary(basic, nonbasic, d, p)


def pivot_row(row: Sequence[Fraction], prow: Sequence[Fraction], s: int) -> List[Fraction]:
    """Transform a non-pivot row (matrix column index ``s`` is the pivot column)."""
    p0 = prow[s]
    factor = row[s] / p0
    out = [v - factor * pv for v, pv in zip(row, prow)]
    out[s] = -factor
    return out


def pivot_column(col: Sequence[Fraction], pcol: Sequence[Fraction], r: int) -> List[Fraction]:
    """Transform an extra column against the pivot column ``pcol`` (matrix row ``r``)."""
    p0 = pcol[r]
    scaled = col[r] / p0
    out = [v - pv * scaled for v, pv in zip(col, pcol)]
    out[r] = scaled
    return out


def pivot(dic: Dictionary, r: int, s: int) -> Dictionary:
    """Exchange basic position ``r`` with nonbasic position ``s``.

    Positions are 0-based into ``dic.basic`` / ``dic.nonbasic``; tags travel
    with their labels. Returns a new dictionary.
    """
    if not (0 <= r < dic.m and 0 <= s < dic.n):
        raise IndexError(f"pivot position ({r}, {s}) outside a {dic.m}x{dic.n} dictionary")
    R, S = r + 1, s + 1
    prow = dic.d[R]
    p0 = prow[S]
    if p0 == 0:
        raise PivotError(f"zero pivot entry at ({dic.basic[r]}, {dic.nonbasic[s]})")
    d = []
    for i, row in enumerate(dic.d):
        if i == R:
            new = [v / p0 for v in prow]
            new[S] = 1 / p0
        else:
            new = pivot_row(row, prow, S)
        d.append(new)
    basic = list(dic.basic)
    nonbasic = list(dic.nonbasic)
    basic[r], nonbasic[s] = dic.nonbasic[s], dic.basic[r]
    return Dictionary(basic, nonbasic, d, dic.num_vars)


class Flag(enum.Enum):
    PRIMAL_FEASIBLE = "primal-feasible"
    DUAL_FEASIBLE = "dual-feasible"
    OPTIMAL = "optimal"
    PRIMAL_INCONSISTENT = "primal-inconsistent"
    DUAL_INCONSISTENT = "dual-inconsistent"


def classify(dic: Dictionary) -> frozenset:
    d = dic.d
    rows = range(1, dic.m + 1)
    cols = range(1, dic.n + 1)
    flags = set()
    if all(d[i][0] >= 0 for i in rows):
        flags.add(Flag.PRIMAL_FEASIBLE)
    if all(d[0][j] >= 0 for j in cols):
        flags.add(Flag.DUAL_FEASIBLE)
    if {Flag.PRIMAL_FEASIBLE, Flag.DUAL_FEASIBLE} <= flags:
        flags.add(Flag.OPTIMAL)
    if any(d[i][0] < 0 and all(d[i][j] >= 0 for j in cols) for i in rows):
        flags.add(Flag.PRIMAL_INCONSISTENT)
    if any(d[0][j] <= 0 and all(d[i][j] < 0 for i in rows) for j in cols):
        flags.add(Flag.DUAL_INCONSISTENT)
    return frozenset(flags)


def corner_point(dic: Dictionary) -> tuple:
    """Values of the original variables at the basic solution."""
    x = [Fraction(0)] * dic.num_vars
    for r, lab in enumerate(dic.basic):
        if lab.kind == ORIGINAL:
            x[lab.index - 1] = dic.d[r + 1][0]
    return tuple(x)
