"""
Numerical standard errors from the observed information.

These are a pragmatic extra: consistency of the estimator is established,
asymptotic normality is not, so the values are labelled as approximate.
"""

import math
from dataclasses import dataclass, replace
from typing import Any, Dict, Optional, Sequence

import numpy as np
from statsmodels.tools.numdiff import approx_hess

from log import warning
from ..errors import EstimationError
from ..filtering.filter import as_series, log_likelihood
from .types import EstimationResult

RELATIVE_STEP = 1e-4
_MIN_STEP_SCALE = 1e-2


@dataclass
class StandardErrors:
    names: Sequence[str]
    hessian: np.ndarray
    positive_definite: bool
    values: Optional[Dict[str, float]]

    @property
    def max_asymmetry(self) -> float:
        scale = max(float(np.max(np.abs(self.hessian))), 1e-300)
        return float(np.max(np.abs(self.hessian - self.hessian.T))) / scale

    def to_dict(self) -> Dict[str, Any]:
        return {
            "names": list(self.names),
            "positive_definite": self.positive_definite,
            "values": self.values,
            "hessian": self.hessian.tolist(),
        }


def standard_errors(series: Sequence[float], result: EstimationResult,
                    params: Optional[Sequence[str]] = None) -> StandardErrors:
    """sqrt(diag((-H)^{-1})) with H the central-difference Hessian of n * L_n at theta_hat.

    ``params`` restricts the Hessian to a subset of parameters, holding the
    others at their estimates.
    """
    spec = result.theta_hat
    arr = as_series(series, spec)
    n = len(arr) - spec.lag_order
    names = list(spec.param_names)
    chosen = list(params) if params is not None else names
    unknown = [p for p in chosen if p not in names]
    if unknown:
        raise EstimationError(f"unknown parameters: {', '.join(unknown)}")
    index = [names.index(p) for p in chosen]
    full = spec.values()
    # a default initialisation moves with theta, as it did during the fit
    f0 = result.f0_used if result.f0_fixed else None

    def total_loglik(sub: np.ndarray) -> float:
        values = full.copy()
        values[index] = sub
        return n * log_likelihood(arr, spec.with_values(values), f0)

    x = full[index]
    steps = RELATIVE_STEP * np.maximum(np.abs(x), _MIN_STEP_SCALE)
    hessian = np.asarray(approx_hess(x, total_loglik, epsilon=steps), dtype=float)
    if not np.all(np.isfinite(hessian)):
        warning("Hessian has non-finite entries; standard errors omitted")
        return StandardErrors(chosen, hessian, False, None)
    info = -hessian
    try:
        np.linalg.cholesky(info)
    except np.linalg.LinAlgError:
        warning("negative Hessian is not positive definite; standard errors omitted")
        return StandardErrors(chosen, hessian, False, None)
    cov = np.linalg.inv(info)
    values = {p: math.sqrt(max(float(cov[i, i]), 0.0)) for i, p in enumerate(chosen)}
    return StandardErrors(chosen, hessian, True, values)


def with_standard_errors(series: Sequence[float], result: EstimationResult) -> EstimationResult:
    """Copy of ``result`` carrying standard errors (or the non-definite flag)"""
    se = standard_errors(series, result)
    return replace(result, std_errors=se.values, hessian_ok=se.positive_definite)
