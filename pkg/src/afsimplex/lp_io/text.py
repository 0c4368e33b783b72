"""Plain-text LP reader and canonical writer.

Grammar (statements end with ``;``, ``#`` starts a comment)::

    max: 5 x1 - 2 x2 + 7 x3;      # or ``min:``; ``max: 0;`` for pure feasibility
    -8 x1 + x2 - 5 x3 >= 6;
    x1 - x2 <= 2;
    x1 = 3;

A term is ``[sign] [coefficient] name`` where the coefficient is an integer
or ``p/q`` fraction and defaults to 1. Decimal literals are refused so no
rounding can enter the data. Every variable is implicitly nonnegative.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List

from ..exact import rat_parse, rat_render
from ..tableau import LinearProgram

LE, GE, EQ = "<=", ">=", "="

_TOKEN_RE = re.compile(r"""
    (?P<comment>\#[^\n]*)
  | (?P<ws>[ \t\r\n]+)
  | (?P<decimal>\d*\.\d+|\d+\.)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<rel><=|>=|=<|=>|≤|≥|=|<|>)
  | (?P<sign>[+-])
  | (?P<colon>:)
  | (?P<semi>;)
""", re.VERBOSE)

_RELATIONS = {"<=": LE, "=<": LE, "≤": LE, ">=": GE, "=>": GE, "≥": GE, "=": EQ}


class LPSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass
class RawConstraint:
    coeffs: Dict[str, Fraction]
    relation: str
    rhs: Fraction

    def __post_init__(self):
        if self.relation not in (LE, GE, EQ):
            raise ValueError(f"unknown relation {self.relation!r}")
        if not any(v != 0 for v in self.coeffs.values()):
            raise ValueError("a constraint needs at least one nonzero coefficient")


@dataclass
class ParsedLP:
    sense: str
    objective: Dict[str, Fraction]
    constraints: List[RawConstraint]
    names: List[str] = field(default_factory=list)


@dataclass
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        column = pos - line_start + 1
        if match is None:
            raise LPSyntaxError(f"unexpected character {text[pos]!r}", line, column)
        kind, value = match.lastgroup, match.group()
        if kind == "decimal":
            raise LPSyntaxError(f"decimal literal {value!r} not allowed; use p/q", line, column)
        if kind not in ("ws", "comment"):
            tokens.append(_Token(kind, value, line, column))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = pos + value.rindex("\n") + 1
        pos = match.end()
    tokens.append(_Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.names: List[str] = []

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            found = "end of input" if tok.kind == "eof" else repr(tok.text)
            raise LPSyntaxError(f"expected {what}, found {found}", tok.line, tok.column)
        self.pos += 1
        return tok

    def literal(self) -> Fraction:
        tok = self.take("num", "a number")
        try:
            return rat_parse(tok.text)
        except ValueError as exc:
            raise LPSyntaxError(str(exc), tok.line, tok.column) from None

    def number(self) -> Fraction:
        sign = 1
        if self.peek().kind == "sign":
            sign = -1 if self.take("sign", "sign").text == "-" else 1
        return sign * self.literal()

    def expression(self, allow_constant: bool) -> Dict[str, Fraction]:
        coeffs: Dict[str, Fraction] = {}
        first = True
        while True:
            tok = self.peek()
            if tok.kind in ("rel", "semi", "eof"):
                if first:
                    raise LPSyntaxError("expected a term", tok.line, tok.column)
                return coeffs
            sign = 1
            if tok.kind == "sign":
                sign = -1 if tok.text == "-" else 1
                self.pos += 1
            elif not first:
                raise LPSyntaxError(f"expected '+' or '-', found {tok.text!r}", tok.line, tok.column)
            coeff = Fraction(1)
            if self.peek().kind == "num":
                coeff = self.literal()
                if self.peek().kind != "name":
                    if allow_constant and first and coeff == 0 and self.peek().kind == "semi":
                        return coeffs
                    nxt = self.peek()
                    raise LPSyntaxError("expected a variable name after coefficient",
                                        nxt.line, nxt.column)
            name = self.take("name", "a variable name").text
            if name not in self.names:
                self.names.append(name)
            coeffs[name] = coeffs.get(name, Fraction(0)) + sign * coeff
            first = False

    def parse(self) -> ParsedLP:
        head = self.take("name", "'max:' or 'min:'")
        if head.text not in ("max", "min"):
            raise LPSyntaxError("the first statement must be 'max:' or 'min:'", head.line, head.column)
        self.take("colon", "':'")
        objective = self.expression(allow_constant=True)
        self.take("semi", "';'")
        constraints = []
        while self.peek().kind != "eof":
            start = self.peek()
            coeffs = self.expression(allow_constant=False)
            rel = self.peek()
            if rel.kind != "rel":
                raise LPSyntaxError("expected a relation '<=', '>=' or '='", rel.line, rel.column)
            if rel.text not in _RELATIONS:
                raise LPSyntaxError(f"unknown relation {rel.text!r}", rel.line, rel.column)
            self.pos += 1
            rhs = self.number()
            self.take("semi", "';'")
            if not any(v != 0 for v in coeffs.values()):
                raise LPSyntaxError("constraint has no nonzero coefficient", start.line, start.column)
            constraints.append(RawConstraint(coeffs, _RELATIONS[rel.text], rhs))
        return ParsedLP(head.text, objective, constraints, list(self.names))


def parse_lp(text: str) -> ParsedLP:
    return _Parser(text).parse()


def normalize(objective: Dict[str, Fraction], constraints: List[RawConstraint],
              sense: str = "max", names: List[str] = None) -> LinearProgram:
    """Bring parsed data to ``max c^T x, A x <= b, x >= 0``.

    ``>=`` rows are negated and ``=`` rows become a ``<=`` row followed by its
    negation. Columns follow ``names`` (first appearance when omitted).
    """
    if names is None:
        names = []
        for coeffs in [objective] + [con.coeffs for con in constraints]:
            for name in coeffs:
                if name not in names:
                    names.append(name)
    sign = 1 if sense == "max" else -1
    c = [sign * objective.get(name, Fraction(0)) for name in names]
    A, b = [], []
    for con in constraints:
        row = [con.coeffs.get(name, Fraction(0)) for name in names]
        if con.relation in (LE, EQ):
            A.append(row)
            b.append(con.rhs)
        if con.relation in (GE, EQ):
            A.append([-v for v in row])
            b.append(-con.rhs)
    return LinearProgram(c, A, b, list(names))


def read_lp(text: str) -> LinearProgram:
    parsed = parse_lp(text)
    return normalize(parsed.objective, parsed.constraints, parsed.sense, parsed.names)


def _linear(coeffs, names) -> str:
    parts = []
    for k, (v, name) in enumerate(zip(coeffs, names)):
        if k == 0:
            parts.append(f"{rat_render(v)} {name}")
        else:
            parts.append(f"{'-' if v < 0 else '+'} {rat_render(abs(v))} {name}")
    return " ".join(parts) if parts else "0"


def lp_to_text(lp: LinearProgram) -> str:
    """Canonical text: every variable in every statement, so order and names survive."""
    lines = [f"max: {_linear(lp.c, lp.var_names)};"]
    for row, rhs in zip(lp.A, lp.b):
        lines.append(f"{_linear(row, lp.var_names)} <= {rat_render(rhs)};")
    return "\n".join(lines) + "\n"


def instance_digest(lp: LinearProgram) -> str:
    return hashlib.sha256(lp_to_text(lp).encode()).hexdigest()[:16]


def read_corner_path(text: str) -> List[tuple]:
    """One corner per line as space-separated rationals; ``#`` comments allowed."""
    points = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            points.append(tuple(rat_parse(tok) for tok in line.split()))
    return points
