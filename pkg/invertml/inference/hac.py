"""
Newey-West long-run variance with Bartlett weights
"""

import math
from typing import Optional, Sequence

import numpy as np

from ..errors import DataError


def default_bandwidth(n: int) -> int:
    """floor(4 (n/100)^(2/9)), capped at n - 1"""
    return max(0, min(n - 1, math.floor(4.0 * (n / 100.0) ** (2.0 / 9.0))))


def newey_west_variance(x: Sequence[float], bandwidth: Optional[int] = None) -> float:
    """gamma_0 + 2 sum_{j=1..m} (1 - j/(m+1)) gamma_j with gamma_j = (1/n) sum (x_t - xbar)(x_{t-j} - xbar)"""
    x = np.asarray(x, dtype=float)
    n = len(x)
    if n < 2:
        raise DataError("Newey-West variance needs at least 2 observations")
    m = default_bandwidth(n) if bandwidth is None else int(bandwidth)
    if not 0 <= m < n:
        raise DataError(f"bandwidth must satisfy 0 <= m < n, got m={m}, n={n}")
    xc = x - x.mean()
    total = float(np.dot(xc, xc)) / n
    for j in range(1, m + 1):
        weight = 1.0 - j / (m + 1.0)
        total += 2.0 * weight * float(np.dot(xc[j:], xc[:-j])) / n
    # Bartlett weighting keeps the estimate non-negative up to rounding
    return max(total, 0.0)
