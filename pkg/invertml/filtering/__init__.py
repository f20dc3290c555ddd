"""Filter recursion over observed data"""

from .filter import (
    FilterPath,
    DivergenceDiagnostic,
    as_series,
    default_f0,
    run_filter,
    log_likelihood,
    log_likelihood_terms,
    divergence_diagnostic,
    plugin_density,
)

__all__ = [
    'FilterPath',
    'DivergenceDiagnostic',
    'as_series',
    'default_f0',
    'run_filter',
    'log_likelihood',
    'log_likelihood_terms',
    'divergence_diagnostic',
    'plugin_density',
]
