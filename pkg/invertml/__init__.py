"""invertml - likelihood estimation with feasible invertibility for observation-driven models"""

__version__ = "0.1.0"
__author__ = "invertml developers"

from .models import ModelKind, ModelSpec, BetaTGarchParams, TvArParams, TLocationParams
from .filtering import run_filter, log_likelihood, divergence_diagnostic
from .simulation import simulate, stationarity_report
from .invertibility import empirical_lyapunov, in_region, feasible_condition_garch, region_grid
from .inference import invertibility_test, confidence_membership
from .estimation import fit_ml, fit_ml_constrained, multi_start, standard_errors
from .invertml import InvertML

__all__ = [
    'ModelKind',
    'ModelSpec',
    'BetaTGarchParams',
    'TvArParams',
    'TLocationParams',
    'run_filter',
    'log_likelihood',
    'divergence_diagnostic',
    'simulate',
    'stationarity_report',
    'empirical_lyapunov',
    'in_region',
    'feasible_condition_garch',
    'region_grid',
    'invertibility_test',
    'confidence_membership',
    'fit_ml',
    'fit_ml_constrained',
    'multi_start',
    'standard_errors',
    'InvertML',
    '__version__',
    '__author__',
]
