"""
Empirical Lyapunov condition and the feasible Beta-t-GARCH condition
"""

import math
from dataclasses import dataclass
from typing import Any, Dict, Sequence

import numpy as np

from ..errors import DomainError
from ..models.ops import lipschitz_series
from ..models.types import BetaTGarchParams, ModelSpec

DEFAULT_DELTA = 0.01


@dataclass
class LyapunovEstimate:
    """(1/n) sum log Lambda_t; ``zero_terms`` counts Lambda_t = 0, which sends the value to -inf"""
    value: float
    n: int
    zero_terms: int

    @property
    def degenerate(self) -> bool:
        return self.zero_terms > 0

    def to_dict(self) -> Dict[str, Any]:
        return {"value": self.value, "n": self.n, "zero_terms": self.zero_terms}


def lyapunov_terms(series: Sequence[float], spec: ModelSpec) -> np.ndarray:
    """log Lambda_t(theta) for t = 1..n; -inf where Lambda_t = 0"""
    with np.errstate(divide="ignore"):
        return np.log(lipschitz_series(series, spec))


def lyapunov_estimate(series: Sequence[float], spec: ModelSpec) -> LyapunovEstimate:
    terms = lyapunov_terms(series, spec)
    zeros = int(np.count_nonzero(np.isneginf(terms)))
    value = -math.inf if zeros else float(np.mean(terms))
    return LyapunovEstimate(value=value, n=len(terms), zero_terms=zeros)


def empirical_lyapunov(series: Sequence[float], spec: ModelSpec) -> float:
    """(1/n) sum_{t=1..n} log Lambda_t(theta), the sample version of E log Lambda_0"""
    return lyapunov_estimate(series, spec).value


def in_region(series: Sequence[float], spec: ModelSpec, delta: float = DEFAULT_DELTA) -> bool:
    """Membership of theta in the estimated invertibility region"""
    if not delta > 0:
        raise DomainError(f"delta must be > 0, got {delta}")
    return empirical_lyapunov(series, spec) <= -delta


def feasible_condition_garch(params: BetaTGarchParams) -> float:
    """(1/2) log|beta + alpha (v+1)| + (1/2) log|beta + (alpha + gamma)(v+1)|

    Negative values imply the contraction condition under a symmetric
    return distribution, without looking at any data.
    """
    up = abs(params.beta + params.alpha * (params.v + 1.0))
    down = abs(params.beta + (params.alpha + params.gamma) * (params.v + 1.0))
    if up == 0.0 or down == 0.0:
        return -math.inf
    return 0.5 * math.log(up) + 0.5 * math.log(down)


def garch_sup_terms(series: Sequence[float], params: BetaTGarchParams) -> np.ndarray:
    """log|beta + (alpha + gamma d_t)(v+1)|, the data-wise supremum of log Lambda_t over y_t's magnitude"""
    y = np.asarray(series, dtype=float)
    news = np.where(y <= 0.0, params.alpha + params.gamma, params.alpha)
    with np.errstate(divide="ignore"):
        return np.log(np.abs(params.beta + news * (params.v + 1.0)))
