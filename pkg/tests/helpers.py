from fractions import Fraction

from afsimplex.tableau import Dictionary, original, slack


def random_dictionary(rng, m, n, bound=9):
    """Plain-labelled dictionary with integer entries; may contain zeros."""
    basic = [slack(n, i + 1) for i in range(m)]
    nonbasic = [original(j + 1) for j in range(n)]
    d = [[Fraction(rng.randint(-bound, bound)) for _ in range(n + 1)] for _ in range(m + 1)]
    return Dictionary(basic, nonbasic, d, n)


def satisfies_original_system(lp, dic, nonbasic_values=None):
    """Substitute a point parametrised by ``dic`` into ``A x + s = b``.

    Nonbasic variables take ``nonbasic_values`` (default 0), basic ones follow
    from their rows. Returns True when every original equation holds exactly.
    """
    p = lp.num_vars
    t = nonbasic_values or [Fraction(0)] * dic.n
    value = {}
    for s, lab in enumerate(dic.nonbasic):
        value[lab.index] = t[s]
    for r, lab in enumerate(dic.basic):
        row = dic.d[r + 1]
        value[lab.index] = row[0] - sum(row[s + 1] * t[s] for s in range(dic.n))
    x = [value[j + 1] for j in range(p)]
    slacks = [value[p + i + 1] for i in range(lp.num_rows)]
    for i in range(lp.num_rows):
        lhs = sum(a * xj for a, xj in zip(lp.A[i], x)) + slacks[i]
        if lhs != lp.b[i]:
            return False
    return True
