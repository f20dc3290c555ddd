"""
Checked single-step operations on a model specification.

These functions validate their inputs and raise DomainError on non-finite
values or filter values outside F_theta. Hot loops use the FilterModel
methods directly.
"""

import math
from typing import Optional, Sequence

import numpy as np

from ..errors import DomainError
from .factory import ModelFactory
from .types import ModelSpec, TLocationParams


def _unpack_window(window: Sequence[float], spec: ModelSpec):
    window = [float(w) for w in np.atleast_1d(window)]
    k = spec.lag_order
    if len(window) != k + 1:
        raise DomainError(f"window must hold {k + 1} observations, got {len(window)}")
    if not all(math.isfinite(w) for w in window):
        raise DomainError("non-finite observation in window")
    return window[0], (window[1] if k else 0.0)


def _finite_f(f: float) -> float:
    f = float(f)
    if not math.isfinite(f):
        raise DomainError(f"non-finite filter value {f}")
    return f


def _check_f(f: float, spec: ModelSpec, model) -> float:
    f = _finite_f(f)
    if not model.domain().contains(f):
        raise DomainError(f"filter value {f} outside {model.domain()}")
    return f


def _domain_guaranteed(spec: ModelSpec) -> bool:
    return not (isinstance(spec.params, TLocationParams) and spec.params.narrow_bound)


def filter_step(f: float, window: Sequence[float], spec: ModelSpec) -> float:
    """phi(f, Y_t^k, theta); window is (y_t, y_{t-1}, ..., y_{t-k})"""
    model = ModelFactory.create_model(spec)
    f = _finite_f(f)
    y, y_lag = _unpack_window(window, spec)
    try:
        out = model.step(f, y, y_lag)
    except ZeroDivisionError:
        out = math.nan
    if not math.isfinite(out):
        raise DomainError(f"update produced non-finite value from f={f}")
    # the map sends F_theta into itself; points outside carry no guarantee
    if _domain_guaranteed(spec) and model.domain().contains(f):
        assert model.domain().contains(out), f"filter left its domain: {out}"
    return out


def filter_step_deriv(f: float, window: Sequence[float], spec: ModelSpec) -> float:
    model = ModelFactory.create_model(spec)
    f = _finite_f(f)
    y, y_lag = _unpack_window(window, spec)
    try:
        return model.deriv(f, y, y_lag)
    except ZeroDivisionError:
        raise DomainError(f"derivative undefined at f={f}") from None


def lipschitz_coeff(window: Sequence[float], spec: ModelSpec) -> float:
    """Stochastic Lipschitz coefficient Lambda_t(theta) for one window"""
    model = ModelFactory.create_model(spec)
    y, y_lag = _unpack_window(window, spec)
    return float(model.lipschitz(y, y_lag))


def lipschitz_series(series: Sequence[float], spec: ModelSpec) -> np.ndarray:
    """Lambda_t(theta) for t = 1..n; series holds y_{1-k}..y_n"""
    series = np.asarray(series, dtype=float)
    k = spec.lag_order
    if series.ndim != 1 or len(series) < k + 1:
        raise DomainError(f"series needs at least {k + 1} observations")
    if not np.all(np.isfinite(series)):
        raise DomainError("non-finite observation in series", index=int(np.argmin(np.isfinite(series))) + 1 - k)
    model = ModelFactory.create_model(spec)
    if k:
        return np.asarray(model.lipschitz(series[k:], series[k - 1:-1]), dtype=float)
    return np.asarray(model.lipschitz(series), dtype=float)


def log_density(y: float, f: float, spec: ModelSpec, y_lag: Optional[float] = None) -> float:
    """log p(y | f, theta); the tv_ar density also conditions on y_lag"""
    model = ModelFactory.create_model(spec)
    f = _check_f(f, spec, model)
    if spec.lag_order and y_lag is None:
        raise DomainError(f"{spec.model_kind.value} density needs the lagged observation")
    y_lag = 0.0 if y_lag is None else float(y_lag)
    if not (math.isfinite(y) and math.isfinite(y_lag)):
        raise DomainError("non-finite observation")
    return float(model.log_density(y, f, y_lag))
