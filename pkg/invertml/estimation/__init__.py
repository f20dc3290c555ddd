"""Maximum-likelihood estimation, plain and restricted to the invertibility region"""

from .types import OptimizerOptions, EstimationResult, FitStatus
from .optimizer import OptimizeOutcome, nelder_mead, initial_simplex
from .mle import (
    MIN_FIT_OBSERVATIONS,
    N_ANCHORS,
    anchor_specs,
    start_lattice,
    fit_ml,
    fit_ml_constrained,
    multi_start,
    best_of_starts,
)
from .std_errors import StandardErrors, standard_errors, with_standard_errors

__all__ = [
    'OptimizerOptions',
    'EstimationResult',
    'FitStatus',
    'OptimizeOutcome',
    'nelder_mead',
    'initial_simplex',
    'MIN_FIT_OBSERVATIONS',
    'N_ANCHORS',
    'anchor_specs',
    'start_lattice',
    'fit_ml',
    'fit_ml_constrained',
    'multi_start',
    'best_of_starts',
    'StandardErrors',
    'standard_errors',
    'with_standard_errors',
]
