"""Exact rational scalars.

Every tableau entry is a :class:`fractions.Fraction`; this module only adds
the strict text form used by the LP reader and the trace encoders.
"""

import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"([+-]?)(\d+)(?:/(\d+))?")

ZERO = Fraction(0)
ONE = Fraction(1)


def rat_make(num: int, den: int = 1) -> Fraction:
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {num}/{den}")
    return Fraction(int(num), int(den))


def rat_add(a, b) -> Fraction:
    return Fraction(a) + Fraction(b)


def rat_sub(a, b) -> Fraction:
    return Fraction(a) - Fraction(b)


def rat_mul(a, b) -> Fraction:
    return Fraction(a) * Fraction(b)


def rat_div(a, b) -> Fraction:
    b = Fraction(b)
    if b == 0:
        raise ZeroDivisionError("division by zero rational")
    return Fraction(a) / b


def rat_cmp(a, b) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    a, b = Fraction(a), Fraction(b)
    return (a > b) - (a < b)


def rat_parse(text: str) -> Fraction:
    """Parse ``[-]digits[/digits]``. Decimal literals are rejected."""
    match = _RATIONAL_RE.fullmatch(text.strip())
    if match is None:
        raise ValueError(f"malformed rational literal: {text!r}")
    sign, num, den = match.groups()
    den = int(den) if den is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in rational literal: {text!r}")
    value = Fraction(int(num), den)
    return -value if sign == "-" else value


def rat_render(r) -> str:
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and strict literal strings; refuse floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return rat_parse(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")
