"""Polynomial roots by minimum-modulus descent on directed lines."""

from .directed_line import (
    DirectedLine,
    ZERO,
    ONE,
    I,
    add,
    mul,
    div,
    modulus,
    argument,
    from_polar,
    int_pow,
    principal_nth_root,
    format_line,
    parse_line,
)
from .polynomial import (
    Polynomial,
    ShiftedExpansion,
    evaluate,
    taylor_shift,
    deflate,
    monic_normalize,
    cauchy_root_bound,
    residual_scale,
)
from .descent import StepConfig, StepOutcome, angle_for_opposition, argand_step
from .solver import SolverConfig, RootResult, find_one_root, find_all_roots, pair_root_sets
from .oracle import OracleConfig, durand_kerner
from .errors import *  # noqa: F401,F403

__version__ = "0.1.0"
