"""Trace documents: the printed table layout and a line-delimited JSON encoding."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from ..exact import rat_parse, rat_render
from ..tableau import Dictionary, Label, LinearProgram, corner_point
from ..trace import Outcome, PivotStep, PivotTrace, Run, Snapshot
from .text import instance_digest

METHODS = ("asm", "asmd", "oracle")


@dataclass
class TraceDocument:
    method: str
    instance: str
    num_vars: int
    var_names: List[str]
    start: tuple
    steps: List[PivotStep]
    outcome: Outcome
    solution: tuple
    certificate: Optional[List[Fraction]] = None
    snapshots: List[Snapshot] = field(default_factory=list)
    show_objective: bool = True


def document_from_run(lp: LinearProgram, run: Run, snapshots: bool = True) -> TraceDocument:
    trace: PivotTrace = run.trace
    if trace.method not in METHODS:
        raise ValueError(f"unknown method {trace.method!r}")
    # phase-1 tables of a pure feasibility system carry no z row
    show_objective = trace.method == "asmd" or any(v != 0 for v in lp.c)
    return TraceDocument(
        method=trace.method,
        instance=instance_digest(lp),
        num_vars=lp.num_vars,
        var_names=list(lp.var_names),
        start=tuple(trace.start),
        steps=list(trace.steps),
        outcome=trace.outcome,
        solution=corner_point(run.dictionary),
        certificate=None if trace.certificate is None else list(trace.certificate),
        snapshots=list(trace.snapshots) if snapshots else [],
        show_objective=show_objective,
    )


# -- table layout -----------------------------------------------------------

def _grid(rows: List[List[str]], bar_after: int = 1) -> List[str]:
    widths = [max(len(row[k]) for row in rows if k < len(row)) for k in range(max(map(len, rows)))]
    out = []
    for row in rows:
        cells = [row[k].ljust(widths[k]) if k < bar_after else row[k].rjust(widths[k])
                 for k in range(len(row))]
        out.append((" ".join(cells[:bar_after]) + " | " + "  ".join(cells[bar_after:])).rstrip())
    return out


def _entry(value: Fraction, starred: bool) -> str:
    return rat_render(value) + ("*" if starred else "")


def render_table(snap: Snapshot, method: str, show_objective: bool = True) -> List[str]:
    dic: Dictionary = snap.dictionary
    star = snap.pivot
    if method == "asmd":
        # tags belong to the dual slacks y_k; the x labels print plain
        head = [""] + ["b"] + [lab.plain().pretty() for lab in dic.nonbasic]
        if snap.aux is not None:
            head.append("w'")
        rows = [head]
        for i in range(dic.m + 1):
            if i == 0 and not show_objective:
                continue
            label = "z" if i == 0 else dic.basic[i - 1].plain().pretty()
            cells = [label, rat_render(dic.d[i][0])]
            cells += [_entry(dic.d[i][j], star == (i - 1, j - 1)) for j in range(1, dic.n + 1)]
            if snap.aux is not None:
                cells.append(rat_render(snap.aux[i]))
            if i > 0:
                cells.append(dic.basic[i - 1].pretty("y"))
            rows.append(cells)
        rows.append(["", ""] + [lab.pretty("y") for lab in dic.nonbasic])
        return _grid(rows)
    head = [""] + ["b"] + [lab.pretty() for lab in dic.nonbasic]
    rows = [head]
    if snap.aux is not None:
        rows.append(["w"] + [rat_render(v) for v in snap.aux])
    if show_objective:
        rows.append(["z"] + [rat_render(v) for v in dic.d[0]])
    for r in range(dic.m):
        cells = [dic.basic[r].pretty(), rat_render(dic.d[r + 1][0])]
        cells += [_entry(dic.d[r + 1][j], star == (r, j - 1)) for j in range(1, dic.n + 1)]
        rows.append(cells)
    return _grid(rows)


def _point(pt) -> str:
    return "(" + ", ".join(rat_render(v) for v in pt) + ")"


def _render_table_doc(doc: TraceDocument) -> str:
    lines = [f"method: {doc.method}  instance: {doc.instance}  variables: {' '.join(doc.var_names)}"]
    for k, snap in enumerate(doc.snapshots):
        lines.append("")
        lines.append("Initial table:" if k == 0 else f"Iteration {k}:")
        lines.extend(render_table(snap, doc.method, doc.show_objective))
    if doc.steps:
        lines.append("")
        for st in doc.steps:
            lines.append(f"pivot {st.iteration}: {st.entering} enters, {st.leaving} leaves, "
                         f"pivot {rat_render(st.pivot_value)}, corner {_point(st.corner)}, "
                         f"w0 {rat_render(st.w0)}")
    lines.append(f"outcome: {doc.outcome.value}")
    if doc.steps or doc.snapshots:
        lines.append("solution: " + " ".join(rat_render(v) for v in doc.solution))
    if doc.certificate is not None:
        lines.append("certificate: " + " ".join(rat_render(v) for v in doc.certificate))
    return "\n".join(lines) + "\n"


# -- machine encoding -------------------------------------------------------

def _rats(values) -> List[str]:
    return [rat_render(v) for v in values]


def _machine_lines(doc: TraceDocument):
    yield {"record": "header", "method": doc.method, "instance": doc.instance,
           "num_vars": doc.num_vars, "var_names": doc.var_names, "start": _rats(doc.start),
           "show_objective": doc.show_objective}
    for k, snap in enumerate(doc.snapshots):
        dic = snap.dictionary
        yield {"record": "tableau", "iter": k,
               "basic": [str(lab) for lab in dic.basic],
               "nonbasic": [str(lab) for lab in dic.nonbasic],
               "d": [_rats(row) for row in dic.d],
               "aux": None if snap.aux is None else _rats(snap.aux),
               "pivot": None if snap.pivot is None else list(snap.pivot)}
    for st in doc.steps:
        yield {"record": "pivot", "iter": st.iteration, "entering": str(st.entering),
               "leaving": str(st.leaving), "pivot": rat_render(st.pivot_value),
               "corner": _rats(st.corner), "w0": rat_render(st.w0)}
    yield {"record": "outcome", "outcome": doc.outcome.value, "solution": _rats(doc.solution),
           "certificate": None if doc.certificate is None else _rats(doc.certificate)}


def render_trace(doc: TraceDocument, format: str = "table") -> str:
    if format == "table":
        return _render_table_doc(doc)
    if format == "machine":
        return "".join(json.dumps(rec, ensure_ascii=False) + "\n" for rec in _machine_lines(doc))
    raise ValueError(f"unknown trace format {format!r}")


def parse_machine_trace(text: str) -> TraceDocument:
    """Inverse of ``render_trace(doc, "machine")``."""
    header = None
    snapshots, steps = [], []
    outcome = solution = certificate = None
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        rec = json.loads(line)
        kind = rec.get("record")
        if kind == "header":
            header = rec
            p = rec["num_vars"]
            continue
        if header is None:
            raise ValueError(f"line {lineno}: record before header")
        if kind == "tableau":
            dic = Dictionary([Label.parse(s, p) for s in rec["basic"]],
                             [Label.parse(s, p) for s in rec["nonbasic"]],
                             [[rat_parse(v) for v in row] for row in rec["d"]], p)
            aux = None if rec["aux"] is None else [rat_parse(v) for v in rec["aux"]]
            piv = None if rec["pivot"] is None else tuple(rec["pivot"])
            snapshots.append(Snapshot(dic, aux, piv))
        elif kind == "pivot":
            steps.append(PivotStep(rec["iter"], Label.parse(rec["entering"], p),
                                   Label.parse(rec["leaving"], p), rat_parse(rec["pivot"]),
                                   tuple(rat_parse(v) for v in rec["corner"]), rat_parse(rec["w0"])))
        elif kind == "outcome":
            outcome = Outcome(rec["outcome"])
            solution = tuple(rat_parse(v) for v in rec["solution"])
            if rec["certificate"] is not None:
                certificate = [rat_parse(v) for v in rec["certificate"]]
        else:
            raise ValueError(f"line {lineno}: unknown record type {kind!r}")
    if header is None or outcome is None:
        raise ValueError("machine trace needs a header and an outcome record")
    return TraceDocument(header["method"], header["instance"], header["num_vars"],
                         header["var_names"], tuple(rat_parse(v) for v in header["start"]),
                         steps, outcome, solution, certificate, snapshots,
                         header["show_objective"])
