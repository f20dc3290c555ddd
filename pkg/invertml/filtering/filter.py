"""
Filter recursion, log-likelihood and initialisation diagnostics
"""

import math
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence

import numpy as np

from log import debug
from ..errors import DomainError
from ..models.factory import ModelFactory
from ..models.base import FilterModel
from ..models.types import ModelSpec, TLocationParams

# Gap below which two filter paths count as merged
VANISH_TOL = 1e-10
# Smallest gap used when fitting the decay slope
_SLOPE_FLOOR = 1e-300


@dataclass
class FilterPath:
    """Filtered parameter values[0..n] with values[0] = init"""
    values: np.ndarray
    init: float
    spec: ModelSpec

    @property
    def n(self) -> int:
        return len(self.values) - 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "spec": self.spec.to_dict(),
            "init": self.init,
            "values": self.values.tolist(),
        }


@dataclass
class DivergenceDiagnostic:
    """Gap between two filter runs started at different points"""
    abs_diff: np.ndarray
    log_slope: float
    vanished: bool
    f0_a: float
    f0_b: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "f0_a": self.f0_a,
            "f0_b": self.f0_b,
            "log_slope": self.log_slope,
            "vanished": self.vanished,
            "abs_diff": self.abs_diff.tolist(),
        }


def as_series(series: Sequence[float], spec: ModelSpec) -> np.ndarray:
    """Validate a series holding y_{1-k}..y_n and return it as a float array"""
    arr = np.asarray(series, dtype=float)
    k = spec.lag_order
    if arr.ndim != 1 or len(arr) < k + 1:
        raise DomainError(f"{spec.model_kind.value} needs at least {k + 1} observations")
    finite = np.isfinite(arr)
    if not finite.all():
        raise DomainError("non-finite observation", index=int(np.argmin(finite)) + 1 - k)
    return arr


def default_f0(series: Sequence[float], spec: ModelSpec) -> float:
    """Default initialisation: clamped sample variance, zero, or clamped median"""
    arr = as_series(series, spec)
    model = ModelFactory.create_model(spec)
    return float(model.default_f0(arr[spec.lag_order:]))


def _domain_checked(spec: ModelSpec) -> bool:
    return not (isinstance(spec.params, TLocationParams) and spec.params.narrow_bound)


def _filter(model: FilterModel, series: np.ndarray, f0: float) -> np.ndarray:
    """Run the recursion, converting arithmetic failures into DomainError"""
    spec = model.spec
    if not math.isfinite(f0):
        raise DomainError(f"non-finite initialisation {f0}", index=0)
    domain = model.domain()
    if _domain_checked(spec) and not domain.contains(f0):
        raise DomainError(f"initialisation {f0} outside [{domain.lower}, {domain.upper}]", index=0)
    try:
        values = model.filter_values(series, f0)
    except (ZeroDivisionError, OverflowError) as e:
        raise DomainError(f"filter recursion failed: {e}") from e
    finite = np.isfinite(values)
    if not finite.all():
        raise DomainError("filter produced a non-finite value", index=int(np.argmin(finite)))
    return values


def run_filter(series: Sequence[float], spec: ModelSpec, f0: Optional[float] = None) -> FilterPath:
    """Iterate the update map over the sample; values[t] = phi(values[t-1], Y_t^k)"""
    arr = as_series(series, spec)
    model = ModelFactory.create_model(spec)
    if f0 is None:
        f0 = float(model.default_f0(arr[spec.lag_order:]))
    values = _filter(model, arr, float(f0))
    return FilterPath(values=values, init=float(f0), spec=spec)


def log_likelihood_terms(series: Sequence[float], spec: ModelSpec, f0: Optional[float] = None) -> np.ndarray:
    """log p(y_t | values[t-1], theta) for t = 1..n"""
    arr = as_series(series, spec)
    model = ModelFactory.create_model(spec)
    k = spec.lag_order
    if f0 is None:
        f0 = float(model.default_f0(arr[k:]))
    values = _filter(model, arr, float(f0))
    y = arr[k:]
    y_lag = arr[k - 1:-1] if k else 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.asarray(model.log_density(y, values[:-1], y_lag), dtype=float)


def log_likelihood(series: Sequence[float], spec: ModelSpec, f0: Optional[float] = None) -> float:
    """Average log-likelihood (1/n) sum log p(y_t | f_t, theta); -inf if a density underflows"""
    terms = log_likelihood_terms(series, spec, f0)
    if np.isnan(terms).any():
        raise DomainError("log-density evaluated to NaN", index=int(np.argmax(np.isnan(terms))) + 1)
    return float(np.mean(terms))


def divergence_diagnostic(series: Sequence[float], spec: ModelSpec, f0_a: float, f0_b: float,
                          tol: float = VANISH_TOL) -> DivergenceDiagnostic:
    """Compare two filter runs that differ only in their initialisation"""
    if f0_a == f0_b:
        raise ValueError("initialisations must differ")
    path_a = run_filter(series, spec, f0_a)
    path_b = run_filter(series, spec, f0_b)
    gap = np.abs(path_a.values - path_b.values)
    usable = gap > _SLOPE_FLOOR
    t = np.arange(len(gap), dtype=float)
    if usable.sum() >= 2:
        slope = float(np.polyfit(t[usable], np.log(gap[usable]), 1)[0])
    else:
        slope = math.nan
    vanished = bool(gap[-1] < tol)
    debug("divergence diagnostic", slope=slope, final_gap=float(gap[-1]), vanished=vanished)
    return DivergenceDiagnostic(abs_diff=gap, log_slope=slope, vanished=vanished,
                                f0_a=float(f0_a), f0_b=float(f0_b))


def plugin_density(series: Sequence[float], spec: ModelSpec, y_values: Sequence[float],
                   f0: Optional[float] = None) -> np.ndarray:
    """One-step-ahead log-density log p(y | f_{n+1}, theta) at the end of the sample"""
    arr = as_series(series, spec)
    path = run_filter(arr, spec, f0)
    model = ModelFactory.create_model(spec)
    y_values = np.asarray(y_values, dtype=float)
    y_lag = arr[-1] if spec.lag_order else 0.0
    return np.asarray(model.log_density(y_values, path.values[-1], y_lag), dtype=float)
