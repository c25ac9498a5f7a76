"""Generalized GCD matrices with exact integer arithmetic."""

from .arithfun import (
    FunctionTable,
    dirichlet_convolve,
    gcd,
    load_custom,
    mobius_invert,
    resolve,
    summatory,
    table,
    tabulate,
)
from .errors import CapExceededError, GcdMatError, TableFormatError
from .exactla import det_bareiss, det_cofactor, mat_mul, rank_ff, transpose
from .explore import ExploreReport, ExploreSpec, explore_problem1
from .matbuild import (
    Factorization,
    IntMatrix,
    build_classic_gcd,
    build_diag,
    build_G,
    build_hform,
    build_indicator,
    build_theorem,
    build_theorem3_literal,
    matrix,
)
from .verify import Report, list_checks, verify

__version__ = "0.1.0"
