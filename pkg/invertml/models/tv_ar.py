"""
Autoregressive model with a time-varying coefficient
"""

import math

import numpy as np

from .base import FilterModel, student_t_log_kernel
from .types import FilterDomain


class TvArModel(FilterModel):
    """y_t = f_t y_{t-1} + sigma eps_t, eps_t ~ t_v, with
    f_{t+1} = omega + beta f_t + alpha u_t y_{t-1} / (1 + u_t^2 / (v sigma^2)),
    u_t = y_t - f_t y_{t-1}.
    """

    def domain(self) -> FilterDomain:
        return FilterDomain(-math.inf, math.inf)

    def step(self, f: float, y: float, y_lag: float = 0.0) -> float:
        p = self.params
        scale2 = p.v * p.sigma * p.sigma
        u = y - f * y_lag
        return p.omega + p.beta * f + p.alpha * u * y_lag / (1.0 + u * u / scale2)

    def deriv(self, f: float, y: float, y_lag: float = 0.0) -> float:
        p = self.params
        scale2 = p.v * p.sigma * p.sigma
        u2 = (y - f * y_lag) ** 2
        kernel = scale2 * (u2 - scale2) / (u2 + scale2) ** 2
        return p.beta + p.alpha * y_lag * y_lag * kernel

    def lipschitz(self, y, y_lag=0.0):
        # the kernel spans [-1, 1/8] over the real line; the derivative is affine in it
        p = self.params
        yl2 = np.square(np.asarray(y_lag, dtype=float))
        lam = np.maximum(np.abs(p.beta - p.alpha * yl2), np.abs(p.beta + p.alpha * yl2 / 8.0))
        return float(lam) if lam.ndim == 0 else lam

    def log_density(self, y, f, y_lag=0.0):
        p = self.params
        z = (np.asarray(y, dtype=float) - np.asarray(f, dtype=float) * np.asarray(y_lag, dtype=float)) / p.sigma
        out = student_t_log_kernel(z, p.v) - math.log(p.sigma)
        return float(out) if np.ndim(out) == 0 else out

    def observe(self, f: float, eps: float, y_lag: float = 0.0) -> float:
        return f * y_lag + self.params.sigma * eps

    def default_f0(self, observations: np.ndarray) -> float:
        return 0.0
