"""Data-generating processes and stationarity diagnostics"""

from .simulator import SimOutput, simulate, recovery_gap, make_rng, student_t_draws, EXPLOSION_GUARD
from .stationarity import StationarityReport, MomentCheck, stationarity_report, draw_contraction_factors

__all__ = [
    'SimOutput',
    'simulate',
    'recovery_gap',
    'make_rng',
    'student_t_draws',
    'EXPLOSION_GUARD',
    'StationarityReport',
    'MomentCheck',
    'stationarity_report',
    'draw_contraction_factors',
]
