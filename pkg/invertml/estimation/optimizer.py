"""
Derivative-free minimisation in the transformed parameter space
"""

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.optimize import minimize

from log import debug
from ..errors import EstimationError
from .types import FitStatus, OptimizerOptions


@dataclass
class OptimizeOutcome:
    x: np.ndarray
    value: float
    status: str
    iterations: int
    evaluations: int
    restarts_used: int = 0

    @property
    def converged(self) -> bool:
        return self.status == FitStatus.CONVERGED


def _guarded(objective: Callable[[np.ndarray], float]) -> Callable[[np.ndarray], float]:
    """Non-finite objective values count as +inf"""
    def wrapped(x: np.ndarray) -> float:
        try:
            value = float(objective(x))
        except (ArithmeticError, ValueError):
            return math.inf
        return value if math.isfinite(value) else math.inf
    return wrapped


def initial_simplex(x0: np.ndarray, step: float) -> np.ndarray:
    """x0 plus one vertex per axis displaced by ``step``"""
    p = len(x0)
    simplex = np.tile(x0, (p + 1, 1))
    simplex[1:] += step * np.eye(p)
    return simplex


def nelder_mead(objective: Callable[[np.ndarray], float], x0, options: Optional[OptimizerOptions] = None) -> OptimizeOutcome:
    """Minimise ``objective`` from ``x0``.

    Standard coefficients (reflection 1, expansion 2, contraction 1/2,
    shrink 1/2). A run stops once the simplex diameter is below
    ``tol_x`` and the value spread is below ``tol_f``, or at ``max_iter``.
    After the first run the simplex is rebuilt around the best
    point ``options.restarts`` times, which guards against a collapsed
    simplex stalling away from the minimum.
    """
    options = options or OptimizerOptions()
    x = np.asarray(x0, dtype=float).copy()
    if x.ndim != 1 or not np.all(np.isfinite(x)):
        raise EstimationError("starting point must be a finite vector")
    func = _guarded(objective)
    value = func(x)
    if not math.isfinite(value):
        raise EstimationError("objective is not finite at the starting point")

    iterations = evaluations = 0
    status = FitStatus.MAX_ITER
    restarts_used = 0
    for attempt in range(options.restarts + 1):
        res = minimize(func, x, method="Nelder-Mead", options={
            "maxiter": max(options.max_iter - iterations, 1),
            "xatol": options.tol_x,
            "fatol": options.tol_f,
            "initial_simplex": initial_simplex(x, options.initial_step),
            "adaptive": False,
        })
        iterations += int(res.nit)
        evaluations += int(res.nfev)
        improved = float(res.fun) < value
        if float(res.fun) <= value:
            x, value = np.asarray(res.x, dtype=float), float(res.fun)
        status = FitStatus.CONVERGED if res.success else FitStatus.MAX_ITER
        restarts_used = attempt
        if iterations >= options.max_iter:
            status = FitStatus.MAX_ITER
            break
        if attempt and not improved:
            break
    debug("nelder-mead", value=value, iterations=iterations, evaluations=evaluations, status=status)
    return OptimizeOutcome(x=x, value=value, status=status, iterations=iterations,
                           evaluations=evaluations, restarts_used=restarts_used)
