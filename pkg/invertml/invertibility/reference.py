"""
Published Beta-t-GARCH estimates for six stock indexes (monthly log-returns
x100, January 1980 to April 2016), kept for the reference report.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..models.types import BetaTGarchParams


@dataclass(frozen=True)
class ReferenceRow:
    name: str
    params: BetaTGarchParams
    std_errors: Tuple[float, float, float, float, float]
    feasible: float       # reported value of the data-free condition
    empirical: float      # reported empirical Lyapunov value
    p_value: float

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "params": self.params.to_dict(),
            "std_errors": dict(zip(BetaTGarchParams.names, self.std_errors)),
            "feasible": self.feasible,
            "empirical": self.empirical,
            "p_value": self.p_value,
        }


def _row(name, omega, beta, alpha, gamma, v, se, feasible, empirical) -> ReferenceRow:
    return ReferenceRow(name, BetaTGarchParams(omega, beta, alpha, gamma, v), se, feasible, empirical, 0.0)


REFERENCE_ROWS: List[ReferenceRow] = [
    _row("DJIA", 0.058, 0.554, 0.000, 0.371, 7.417, (0.019, 0.160, 0.047, 0.116, 2.339), 0.357, -0.507),
    _row("S&P 500", 0.020, 0.759, 0.023, 0.309, 8.893, (0.013, 0.114, 0.046, 0.111, 2.640), 0.691, -0.181),
    _row("NASDAQ", 0.026, 0.754, 0.106, 0.198, 9.865, (0.010, 0.077, 0.033, 0.071, 3.396), 1.022, -0.109),
    _row("NI 225", 0.088, 0.637, 0.000, 0.230, 26.552, (0.010, 0.000, 0.010, 0.037, 1.083), 0.746, -0.416),
    _row("FTSE 100", 0.042, 0.595, 0.059, 0.332, 7.621, (0.012, 0.134, 0.049, 0.107, 2.255), 0.737, -0.378),
    _row("DAX", 0.046, 0.731, 0.050, 0.212, 7.932, (0.013, 0.088, 0.046, 0.073, 2.905), 0.642, -0.218),
]


def reference_row(name: str) -> ReferenceRow:
    for row in REFERENCE_ROWS:
        if row.name.lower() == name.lower():
            return row
    raise KeyError(f"no reference row named {name!r}")
