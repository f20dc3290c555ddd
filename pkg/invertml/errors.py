"""
Exception hierarchy. Each class carries the process exit code the CLI uses.
"""

from typing import Optional


class InvertMLError(Exception):
    """Base class for all invertml failures"""
    exit_code = 3


class ConfigError(InvertMLError, ValueError):
    """Invalid run configuration; ``field`` is the dotted path of the offending key"""
    exit_code = 1

    def __init__(self, message: str, field: Optional[str] = None):
        self.field = field
        super().__init__(f"{field}: {message}" if field else message)


class DataError(InvertMLError, ValueError):
    """Unreadable or unusable input data"""
    exit_code = 2

    def __init__(self, message: str, row: Optional[int] = None):
        self.row = row
        super().__init__(f"row {row}: {message}" if row is not None else message)


class NumericalError(InvertMLError):
    exit_code = 3


class DomainError(NumericalError, ValueError):
    """Non-finite input or a filter value outside F_theta"""

    def __init__(self, message: str, index: Optional[int] = None):
        self.index = index
        super().__init__(f"t={index}: {message}" if index is not None else message)


class NonstationarityError(NumericalError):
    """Simulated path exceeded the explosion guard"""


class EstimationError(NumericalError):
    """Optimizer could not produce a finite likelihood"""


class DegenerateVarianceError(NumericalError):
    """Long-run variance of log Lambda_t is (numerically) zero"""


EXIT_SUCCESS = 0
EXIT_CONFIG = ConfigError.exit_code
EXIT_DATA = DataError.exit_code
EXIT_NUMERICAL = NumericalError.exit_code
