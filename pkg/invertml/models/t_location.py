"""
Student-t location model with a score-driven mean
"""

import math

import numpy as np

from .base import FilterModel, student_t_log_kernel
from .types import FilterDomain


def score_slope(x, scale2: float):
    """s(x) = k (x^2 - k) / (x^2 + k)^2 with k = v sigma^2; spans [-1, 1/8]"""
    x2 = np.square(np.asarray(x, dtype=float))
    return scale2 * (x2 - scale2) / np.square(x2 + scale2)


class TLocationModel(FilterModel):
    """y_t = f_t + sigma eps_t, eps_t ~ t_v, with
    f_{t+1} = omega + beta f_t + alpha x_t / (1 + x_t^2 / (v sigma^2)), x_t = y_t - f_t.
    """

    def domain(self) -> FilterDomain:
        return FilterDomain(self.params.omega_bar_lo, self.params.omega_bar_hi)

    @property
    def _scale2(self) -> float:
        return self.params.v * self.params.sigma ** 2

    def step(self, f: float, y: float, y_lag: float = 0.0) -> float:
        p = self.params
        x = y - f
        return p.omega + p.beta * f + p.alpha * x / (1.0 + x * x / self._scale2)

    def deriv(self, f: float, y: float, y_lag: float = 0.0) -> float:
        p = self.params
        return p.beta + p.alpha * float(score_slope(y - f, self._scale2))

    def lipschitz(self, y, y_lag=0.0):
        p = self.params
        k = self._scale2
        lo, hi = p.omega_bar_lo, p.omega_bar_hi
        y = np.asarray(y, dtype=float)
        # x = y - f runs over [y - hi, y - lo]
        s_a = score_slope(y - hi, k)
        s_b = score_slope(y - lo, k)
        s_min = np.where((y >= lo) & (y <= hi), -1.0, np.minimum(s_a, s_b))
        peak = math.sqrt(3.0 * k)
        hits_peak = ((y - peak >= lo) & (y - peak <= hi)) | ((y + peak >= lo) & (y + peak <= hi))
        s_max = np.where(hits_peak, 0.125, np.maximum(s_a, s_b))
        lam = np.maximum(np.abs(p.beta + p.alpha * s_min), np.abs(p.beta + p.alpha * s_max))
        return float(lam) if lam.ndim == 0 else lam

    def log_density(self, y, f, y_lag=0.0):
        p = self.params
        z = (np.asarray(y, dtype=float) - np.asarray(f, dtype=float)) / p.sigma
        out = student_t_log_kernel(z, p.v) - math.log(p.sigma)
        return float(out) if np.ndim(out) == 0 else out

    def observe(self, f: float, eps: float, y_lag: float = 0.0) -> float:
        return f + self.params.sigma * eps

    def default_f0(self, observations: np.ndarray) -> float:
        return self.domain().clamp(float(np.median(observations)))


def location_sup_bound(params) -> float:
    """Data-free upper bound max(|beta - alpha|, |beta + alpha/8|) on Lambda_t"""
    return max(abs(params.beta - params.alpha), abs(params.beta + params.alpha / 8.0))
