"""Seeded random LP instances for the clone and invariant harnesses."""

import random
from fractions import Fraction

from ..tableau import LinearProgram

_MAX_TRIES = 10_000


def _nonzero_row(rng: random.Random, cols: int, bound: int) -> list:
    while True:
        row = [rng.randint(-bound, bound) for _ in range(cols)]
        if any(row):
            return row


def gen_random_lp(seed, rows: int, cols: int, entry_bound: int = 9,
                  feasible_bias: bool = False) -> LinearProgram:
    """Integer data in ``[-entry_bound, entry_bound]``.

    With ``feasible_bias`` a nonnegative point ``x*`` is drawn first and each
    row is kept only if ``A_i x*`` fits the bound, so ``b_i`` can be drawn from
    ``[A_i x*, entry_bound]`` and ``x*`` is feasible by construction.
    """
    if rows < 1 or cols < 1 or entry_bound < 1:
        raise ValueError("rows, cols and entry_bound must be positive")
    rng = random.Random(seed)
    c = [rng.randint(-entry_bound, entry_bound) for _ in range(cols)]
    A, b = [], []
    if feasible_bias:
        point = [rng.randint(0, 2) for _ in range(cols)]
        for _ in range(rows):
            for _ in range(_MAX_TRIES):
                row = _nonzero_row(rng, cols, entry_bound)
                lhs = sum(a * x for a, x in zip(row, point))
                if -entry_bound <= lhs <= entry_bound:
                    break
            else:
                raise RuntimeError("could not draw a row within the entry bound")
            A.append(row)
            b.append(rng.randint(lhs, entry_bound))
    else:
        for _ in range(rows):
            A.append(_nonzero_row(rng, cols, entry_bound))
            b.append(rng.randint(-entry_bound, entry_bound))
    return LinearProgram(c, A, b)


def add_violated_row(lp: LinearProgram, seed) -> LinearProgram:
    """Append ``A_i x >= b_i + 1`` for a random row ``i``; the result is infeasible."""
    rng = random.Random(seed)
    i = rng.randrange(lp.num_rows)
    A = [list(row) for row in lp.A] + [[-v for v in lp.A[i]]]
    b = list(lp.b) + [-lp.b[i] - Fraction(1)]
    return LinearProgram(list(lp.c), A, b, list(lp.var_names))
