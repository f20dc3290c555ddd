"""Empirical Lyapunov regions, the feasible condition and region grids"""

from .lyapunov import (
    DEFAULT_DELTA,
    LyapunovEstimate,
    lyapunov_terms,
    lyapunov_estimate,
    empirical_lyapunov,
    in_region,
    feasible_condition_garch,
    garch_sup_terms,
)
from .region import AxisSpec, RegionCell, RegionGrid, CellStatus, region_grid, feasible_value, DEFAULT_GRID_SIZE
from .reference import ReferenceRow, REFERENCE_ROWS, reference_row

__all__ = [
    'DEFAULT_DELTA',
    'LyapunovEstimate',
    'lyapunov_terms',
    'lyapunov_estimate',
    'empirical_lyapunov',
    'in_region',
    'feasible_condition_garch',
    'garch_sup_terms',
    'AxisSpec',
    'RegionCell',
    'RegionGrid',
    'CellStatus',
    'region_grid',
    'feasible_value',
    'DEFAULT_GRID_SIZE',
    'ReferenceRow',
    'REFERENCE_ROWS',
    'reference_row',
]
