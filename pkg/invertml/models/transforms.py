"""
Bijections between admissible parameter sets and R^p.

Positive parameters use a shifted log, bounded ones a scaled logit. The
insets keep the optimiser away from the edges where the likelihood or the
filter range degenerate.
"""

import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple, Union

import numpy as np
from scipy.special import expit, logit

from .types import ModelKind, ModelSpec, PARAMS_BY_KIND

# Smallest distance from a bound a transformed coordinate can represent
_TINY = 1e-12

OMEGA_FLOOR = 1e-8
BETA_FLOOR = 1e-8
BETA_CEIL = 1.0 - 1e-6
GARCH_V_FLOOR = 2.0 + 1e-6
SIGMA_FLOOR = 1e-8
V_FLOOR = 1e-6


@dataclass(frozen=True)
class Coordinate:
    """How one parameter maps to the real line"""
    kind: str                      # "identity" | "log" | "logit"
    lower: float = 0.0
    upper: float = 1.0
    shift_by: Optional[str] = None  # lower bound is -<param> (gamma >= -alpha)

    def to_real(self, value: float, lower: float) -> float:
        if self.kind == "identity":
            return value
        if self.kind == "log":
            return math.log(max(value - lower, _TINY))
        u = (value - lower) / (self.upper - lower)
        return float(logit(min(max(u, _TINY), 1.0 - _TINY)))

    def from_real(self, x: float, lower: float) -> float:
        if self.kind == "identity":
            return x
        if self.kind == "log":
            return lower + math.exp(min(x, 700.0))
        return lower + (self.upper - lower) * float(expit(x))


_COORDINATES: Dict[ModelKind, Tuple[Coordinate, ...]] = {
    ModelKind.BETA_T_GARCH: (
        Coordinate("log", OMEGA_FLOOR),
        Coordinate("logit", BETA_FLOOR, BETA_CEIL),
        Coordinate("log", 0.0),
        Coordinate("log", 0.0, shift_by="alpha"),
        Coordinate("log", GARCH_V_FLOOR),
    ),
    ModelKind.TV_AR: (
        Coordinate("identity"),
        Coordinate("logit", -BETA_CEIL, BETA_CEIL),
        Coordinate("identity"),
        Coordinate("log", SIGMA_FLOOR),
        Coordinate("log", V_FLOOR),
    ),
    ModelKind.T_LOCATION: (
        Coordinate("identity"),
        Coordinate("logit", -BETA_CEIL, BETA_CEIL),
        Coordinate("identity"),
        Coordinate("log", SIGMA_FLOOR),
        Coordinate("log", V_FLOOR),
    ),
}


def _lower(coord: Coordinate, values: Dict[str, float]) -> float:
    if coord.shift_by is not None:
        return coord.lower - values[coord.shift_by]
    return coord.lower


def param_transform(spec: ModelSpec) -> np.ndarray:
    """Map admissible parameters to an unconstrained vector"""
    names = spec.param_names
    values = dict(zip(names, spec.values().tolist()))
    return np.array([c.to_real(values[n], _lower(c, values))
                     for n, c in zip(names, _COORDINATES[spec.model_kind])])


def param_untransform(x, model_kind: Union[str, ModelKind], **extra) -> ModelSpec:
    """Inverse of param_transform; every real vector maps to an admissible point"""
    kind = ModelKind.from_string(model_kind)
    names = PARAMS_BY_KIND[kind].names
    x = np.asarray(x, dtype=float)
    if x.shape != (len(names),):
        raise ValueError(f"{kind.value} needs a vector of length {len(names)}")
    values: Dict[str, float] = {}
    # shifted coordinates reference parameters that precede them
    for n, c, xi in zip(names, _COORDINATES[kind], x.tolist()):
        values[n] = c.from_real(xi, _lower(c, values))
    return ModelSpec.from_values(kind, [values[n] for n in names], **extra)
