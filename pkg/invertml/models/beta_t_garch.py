"""
Beta-t-GARCH(1,1) with leverage
"""

import math

import numpy as np
from scipy.special import gammaln

from .base import FilterModel
from .types import FilterDomain


class BetaTGarchModel(FilterModel):
    """Volatility filter whose news term is the bounded score of a Student-t.

    f_{t+1} = omega + beta f_t + (alpha + gamma d_t) (v+1) y_t^2 / ((v-2) + y_t^2 / f_t),
    with d_t = 1 when y_t <= 0. The last term is non-negative, so the recursion
    maps [omega_bar, inf) into itself.
    """

    def domain(self) -> FilterDomain:
        return FilterDomain(self.params.omega_bar, math.inf)

    def _news(self, y):
        p = self.params
        return np.where(np.asarray(y) <= 0.0, p.alpha + p.gamma, p.alpha)

    def step(self, f: float, y: float, y_lag: float = 0.0) -> float:
        p = self.params
        y2 = y * y
        news = p.alpha + p.gamma if y <= 0.0 else p.alpha
        return p.omega + p.beta * f + news * (p.v + 1.0) * y2 * f / ((p.v - 2.0) * f + y2)

    def deriv(self, f: float, y: float, y_lag: float = 0.0) -> float:
        p = self.params
        y2 = y * y
        news = p.alpha + p.gamma if y <= 0.0 else p.alpha
        denom = (p.v - 2.0) * f + y2
        return p.beta + news * (p.v + 1.0) * y2 * y2 / (denom * denom)

    def lipschitz(self, y, y_lag=0.0):
        # d phi / d f is decreasing in f, so the supremum sits at f = omega_bar
        p = self.params
        y = np.asarray(y, dtype=float)
        y2 = y * y
        denom = (p.v - 2.0) * p.omega_bar + y2
        lam = np.abs(p.beta + self._news(y) * (p.v + 1.0) * y2 * y2 / (denom * denom))
        return float(lam) if lam.ndim == 0 else lam

    def log_density(self, y, f, y_lag=0.0):
        v = self.params.v
        const = gammaln((v + 1.0) / 2.0) - gammaln(v / 2.0) - 0.5 * math.log((v - 2.0) * math.pi)
        y = np.asarray(y, dtype=float)
        f = np.asarray(f, dtype=float)
        out = const - 0.5 * np.log(f) - (v + 1.0) / 2.0 * np.log1p(y * y / ((v - 2.0) * f))
        return float(out) if out.ndim == 0 else out

    def observe(self, f: float, eps: float, y_lag: float = 0.0) -> float:
        v = self.params.v
        return math.sqrt(f) * eps * math.sqrt((v - 2.0) / v)

    def default_f0(self, observations: np.ndarray) -> float:
        return max(float(np.var(observations)), self.params.omega_bar)
