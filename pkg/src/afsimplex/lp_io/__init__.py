from .generate import add_violated_row, gen_random_lp
from .text import (EQ, GE, LE, LPSyntaxError, ParsedLP, RawConstraint, instance_digest,
                   lp_to_text, normalize, parse_lp, read_corner_path, read_lp)
from .traces import (TraceDocument, document_from_run, parse_machine_trace, render_table,
                     render_trace)

__all__ = [
    "EQ", "GE", "LE", "LPSyntaxError", "ParsedLP", "RawConstraint", "TraceDocument",
    "add_violated_row", "document_from_run", "gen_random_lp", "instance_digest",
    "lp_to_text", "normalize", "parse_lp", "parse_machine_trace", "read_corner_path",
    "read_lp", "render_table", "render_trace",
]
