"""
Filter model base class
"""

import math
from abc import ABC, abstractmethod

import numpy as np
from scipy.special import gammaln

from .types import FilterDomain, ModelSpec


def student_t_log_kernel(z, v: float):
    """Log-density of the standard Student-t with v degrees of freedom at z"""
    const = gammaln((v + 1.0) / 2.0) - gammaln(v / 2.0) - 0.5 * math.log(v * math.pi)
    return const - (v + 1.0) / 2.0 * np.log1p(np.square(z) / v)


class FilterModel(ABC):
    """Update map phi, its derivative, the Lipschitz coefficient and the
    conditional density of one observation-driven model.

    Scalar methods (``step``, ``deriv``) take the current observation ``y`` and
    the lagged observation ``y_lag`` (ignored by models without lags). The
    vectorised methods (``lipschitz``, ``log_density``) accept numpy arrays.
    """

    def __init__(self, spec: ModelSpec):
        self.spec = spec
        self.params = spec.params

    @property
    def lag_order(self) -> int:
        return self.spec.lag_order

    @abstractmethod
    def domain(self) -> FilterDomain:
        """Set F_theta that the recursion maps into itself"""

    @abstractmethod
    def step(self, f: float, y: float, y_lag: float = 0.0) -> float:
        """phi(f, Y_t^k, theta)"""

    @abstractmethod
    def deriv(self, f: float, y: float, y_lag: float = 0.0) -> float:
        """Partial derivative of phi with respect to f"""

    @abstractmethod
    def lipschitz(self, y, y_lag=0.0):
        """Supremum over F_theta of |d phi / d f|"""

    @abstractmethod
    def log_density(self, y, f, y_lag=0.0):
        """log p(y | f, theta)"""

    @abstractmethod
    def observe(self, f: float, eps: float, y_lag: float = 0.0) -> float:
        """Observation generated by parameter f and a raw Student-t draw eps"""

    @abstractmethod
    def default_f0(self, observations: np.ndarray) -> float:
        """Filter initialisation used when none is supplied"""

    def level(self) -> float:
        """Deterministic starting level of the data-generating recursion"""
        beta = self.params.beta
        if beta == 1.0:
            return self.params.omega
        return self.params.omega / (1.0 - beta)

    def filter_values(self, series: np.ndarray, f0: float) -> np.ndarray:
        """Run the recursion over y_1..y_n; series holds y_{1-k}..y_n"""
        k = self.lag_order
        ys = series.tolist()
        n = len(ys) - k
        out = [0.0] * (n + 1)
        f = float(f0)
        out[0] = f
        step = self.step
        if k:
            for t in range(1, n + 1):
                f = step(f, ys[t + k - 1], ys[t + k - 2])
                out[t] = f
        else:
            for t in range(1, n + 1):
                f = step(f, ys[t - 1])
                out[t] = f
        return np.asarray(out)
