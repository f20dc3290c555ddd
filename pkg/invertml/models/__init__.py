"""Observation-driven models: parameter vectors, update maps, densities"""

from .types import (
    ModelKind,
    BetaTGarchParams,
    TvArParams,
    TLocationParams,
    ModelSpec,
    FilterDomain,
    PARAMS_BY_KIND,
    param_validate,
)
from .base import FilterModel
from .factory import ModelFactory
from .ops import filter_step, filter_step_deriv, lipschitz_coeff, lipschitz_series, log_density
from .t_location import location_sup_bound
from .transforms import param_transform, param_untransform

__all__ = [
    'ModelKind',
    'BetaTGarchParams',
    'TvArParams',
    'TLocationParams',
    'ModelSpec',
    'FilterDomain',
    'PARAMS_BY_KIND',
    'param_validate',
    'FilterModel',
    'ModelFactory',
    'filter_step',
    'filter_step_deriv',
    'lipschitz_coeff',
    'lipschitz_series',
    'log_density',
    'location_sup_bound',
    'param_transform',
    'param_untransform',
]
