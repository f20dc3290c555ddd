"""
Data-generating processes for the three models
"""

import math
from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np

from log import debug
from ..errors import ConfigError, NonstationarityError
from ..filtering.filter import run_filter
from ..models.factory import ModelFactory
from ..models.types import ModelSpec, param_validate

EXPLOSION_GUARD = 1e12
DEFAULT_BURN_IN = 1000


def make_rng(seed) -> np.random.Generator:
    """Counter-based Philox generator; seed may be an int or a SeedSequence"""
    return np.random.Generator(np.random.Philox(seed))


def student_t_draws(rng: np.random.Generator, v: float, size: int) -> np.ndarray:
    """Raw Student-t draws as a normal over the root of a scaled chi-square"""
    z = rng.standard_normal(size)
    w = rng.chisquare(v, size)
    return z / np.sqrt(w / v)


@dataclass
class SimOutput:
    """Simulated observations y_{1-k}..y_n and the true parameter path f_1..f_n"""
    series: np.ndarray
    true_path: np.ndarray
    seed: int
    burn_in: int
    spec: ModelSpec

    @property
    def n(self) -> int:
        return len(self.true_path)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "spec": self.spec.to_dict(),
            "seed": self.seed,
            "burn_in": self.burn_in,
            "series": self.series.tolist(),
            "true_path": self.true_path.tolist(),
        }


def simulate(spec: ModelSpec, n: int, seed: int, burn_in: int = DEFAULT_BURN_IN) -> SimOutput:
    """Generate n observations after burn_in discarded steps, started at the unconditional level"""
    violations = param_validate(spec)
    if violations:
        raise ConfigError(f"inadmissible parameters: {', '.join(violations)}", field="params")
    if n < 1:
        raise ConfigError("n must be >= 1", field="simulate.n")
    if burn_in < 0:
        raise ConfigError("burn_in must be >= 0", field="simulate.burn_in")

    model = ModelFactory.create_model(spec)
    k = spec.lag_order
    total = burn_in + k + n
    eps = student_t_draws(make_rng(seed), spec.params.v, total).tolist()

    ys = [0.0] * total
    fs = [0.0] * total
    f = model.level()
    y_lag = 0.0
    observe, step = model.observe, model.step
    for i in range(total):
        y = observe(f, eps[i], y_lag)
        ys[i] = y
        fs[i] = f
        f = step(f, y, y_lag)
        if not (abs(f) <= EXPLOSION_GUARD):
            raise NonstationarityError(
                f"simulated parameter path exceeded {EXPLOSION_GUARD:g} at step {i + 1 - burn_in - k}")
        y_lag = y

    series = np.asarray(ys[burn_in:])
    true_path = np.asarray(fs[burn_in + k:])
    debug("simulated", model=spec.model_kind.value, n=n, seed=seed, burn_in=burn_in)
    return SimOutput(series=series, true_path=true_path, seed=int(seed), burn_in=int(burn_in), spec=spec)


def recovery_gap(sim: SimOutput, spec: Optional[ModelSpec] = None, f0: Optional[float] = None) -> np.ndarray:
    """|f_hat_t(theta) - f_t^o| for t = 1..n, filtering the simulated data at theta (default: the true one)"""
    spec = spec or sim.spec
    path = run_filter(sim.series, spec, f0)
    return np.abs(path.values[:-1] - sim.true_path)
