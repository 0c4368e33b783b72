"""Exact artificial-free phase 1 simplex (primal and dual) with a classical oracle."""

from importlib import resources

from .asm import AsmState, asm_solve, init_asm
from .asmd import AsmdState, asmd_solve, init_asmd
from .oracle import (AuxiliaryProblem, CornerPath, PathReport, build_auxiliary, compare_paths,
                     oracle_solve, simplex_phase1)
from .tableau import (Dictionary, Flag, Label, LinearProgram, build_dictionary, classify,
                      corner_point, pivot)
from .trace import InvariantError, Outcome, PivotStep, PivotTrace, Run, SolverOptions

__version__ = "0.1.0"


def fixture_path(name: str):
    """Path of a bundled fixture (``example1.lp``, ``example2.lp``, ``afm_path.txt``, ...)."""
    return resources.files(__package__).joinpath("fixtures", name)
