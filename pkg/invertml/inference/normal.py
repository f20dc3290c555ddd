"""
Standard normal distribution helpers
"""

import math

from scipy.stats import norm

from ..errors import DomainError


def normal_cdf(x: float) -> float:
    return float(norm.cdf(x))


def normal_quantile(p: float) -> float:
    """z_p with Phi(z_p) = p, for p in (0, 1)"""
    if not (0.0 < p < 1.0) or math.isnan(p):
        raise DomainError(f"probability must lie in (0, 1), got {p}")
    return float(norm.ppf(p))
