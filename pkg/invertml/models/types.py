"""
Model types - parameter vectors, model specification and filter domain
"""

import math
from enum import Enum
from dataclasses import dataclass, field, fields
from typing import Any, ClassVar, Dict, List, Sequence, Tuple, Type, Union

import numpy as np


class ModelKind(Enum):
    """Observation-driven model families"""
    BETA_T_GARCH = "beta_t_garch"
    TV_AR = "tv_ar"
    T_LOCATION = "t_location"

    @property
    def lag_order(self) -> int:
        """Number of lagged observations the update map needs"""
        return 1 if self is ModelKind.TV_AR else 0

    @classmethod
    def from_string(cls, value: Union[str, 'ModelKind']) -> 'ModelKind':
        if isinstance(value, ModelKind):
            return value
        try:
            return cls(value.strip().lower())
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"Unknown model kind: {value!r} (expected one of {choices})") from None


class _ParamVector:
    """Shared behaviour of the static parameter vectors"""

    names: ClassVar[Tuple[str, ...]] = ()

    def as_array(self) -> np.ndarray:
        return np.array([getattr(self, n) for n in self.names], dtype=float)

    def to_dict(self) -> Dict[str, Any]:
        return {n: float(getattr(self, n)) for n in self.names}

    @classmethod
    def from_array(cls, values: Sequence[float], **extra: Any):
        if len(values) != len(cls.names):
            raise ValueError(f"{cls.__name__} needs {len(cls.names)} values, got {len(values)}")
        return cls(**{n: float(v) for n, v in zip(cls.names, values)}, **extra)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]):
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError(f"Unknown parameters for {cls.__name__}: {', '.join(unknown)}")
        missing = [n for n in cls.names if n not in data]
        if missing:
            raise ValueError(f"Missing parameters for {cls.__name__}: {', '.join(missing)}")
        return cls(**{k: (bool(v) if isinstance(v, bool) else float(v)) for k, v in data.items()})

    def replace(self, **changes: float):
        values = {f.name: getattr(self, f.name) for f in fields(self)}
        values.update(changes)
        return type(self)(**values)

    def _non_finite(self) -> List[str]:
        return [f"{n} is not finite" for n in self.names if not math.isfinite(getattr(self, n))]


@dataclass(frozen=True)
class BetaTGarchParams(_ParamVector):
    """Beta-t-GARCH(1,1) with leverage: f is the conditional variance"""
    omega: float
    beta: float
    alpha: float
    gamma: float
    v: float

    names: ClassVar[Tuple[str, ...]] = ("omega", "beta", "alpha", "gamma", "v")

    @property
    def omega_bar(self) -> float:
        """Lower end of the filter range, omega / (1 - beta)"""
        if self.beta >= 1.0:
            return math.inf
        return self.omega / (1.0 - self.beta)

    def violations(self) -> List[str]:
        bad = self._non_finite()
        if bad:
            return bad
        if not self.omega > 0:
            bad.append("omega>0")
        if not self.beta >= 0:
            bad.append("beta>=0")
        if not self.beta < 1:
            bad.append("beta<1")
        if not self.alpha >= 0:
            bad.append("alpha>=0")
        if not self.gamma >= -self.alpha:
            bad.append("gamma>=-alpha")
        if not self.v > 2:
            bad.append("v>2")
        return bad


@dataclass(frozen=True)
class TvArParams(_ParamVector):
    """Autoregression with a score-driven time-varying coefficient"""
    omega: float
    beta: float
    alpha: float
    sigma: float
    v: float

    names: ClassVar[Tuple[str, ...]] = ("omega", "beta", "alpha", "sigma", "v")

    def violations(self) -> List[str]:
        bad = self._non_finite()
        if bad:
            return bad
        if not self.sigma > 0:
            bad.append("sigma>0")
        if not self.v > 0:
            bad.append("v>0")
        return bad


@dataclass(frozen=True)
class TLocationParams(_ParamVector):
    """Student-t location model with a score-driven mean.

    ``narrow_bound`` selects the correction bound c = |alpha| sqrt(3 v sigma^2) / 4
    instead of the exact supremum |alpha| sqrt(v sigma^2) / 2. The narrow bound
    does not cover the full filter range.
    """
    omega: float
    beta: float
    alpha: float
    sigma: float
    v: float
    narrow_bound: bool = field(default=False, compare=True)

    names: ClassVar[Tuple[str, ...]] = ("omega", "beta", "alpha", "sigma", "v")

    @property
    def correction_bound(self) -> float:
        scale2 = self.v * self.sigma ** 2
        if self.narrow_bound:
            return abs(self.alpha) * math.sqrt(3.0 * scale2) / 4.0
        return abs(self.alpha) * math.sqrt(scale2) / 2.0

    @property
    def omega_bar_lo(self) -> float:
        return self.omega / (1.0 - self.beta) - self.correction_bound / (1.0 - abs(self.beta))

    @property
    def omega_bar_hi(self) -> float:
        return self.omega / (1.0 - self.beta) + self.correction_bound / (1.0 - abs(self.beta))

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        if self.narrow_bound:
            data["narrow_bound"] = True
        return data

    def violations(self) -> List[str]:
        bad = self._non_finite()
        if bad:
            return bad
        if not abs(self.beta) < 1:
            bad.append("|beta|<1")
        if not self.sigma > 0:
            bad.append("sigma>0")
        if not self.v > 0:
            bad.append("v>0")
        return bad


ModelParams = Union[BetaTGarchParams, TvArParams, TLocationParams]

PARAMS_BY_KIND: Dict[ModelKind, Type] = {
    ModelKind.BETA_T_GARCH: BetaTGarchParams,
    ModelKind.TV_AR: TvArParams,
    ModelKind.T_LOCATION: TLocationParams,
}


@dataclass(frozen=True)
class FilterDomain:
    """Interval F_theta in which the filtered parameter lives"""
    lower: float
    upper: float

    def contains(self, f: float, tol: float = 1e-9) -> bool:
        slack_lo = tol * max(1.0, abs(self.lower)) if math.isfinite(self.lower) else 0.0
        slack_hi = tol * max(1.0, abs(self.upper)) if math.isfinite(self.upper) else 0.0
        return self.lower - slack_lo <= f <= self.upper + slack_hi

    def clamp(self, f: float) -> float:
        return min(max(f, self.lower), self.upper)

    def search_bounds(self, margin: float = 50.0) -> Tuple[float, float]:
        """Finite interval for numerical searches; infinite ends are cut `margin` beyond the finite ones"""
        lo, hi = self.lower, self.upper
        if not math.isfinite(lo) and not math.isfinite(hi):
            return -margin, margin
        if not math.isfinite(hi):
            return lo, lo + margin
        if not math.isfinite(lo):
            return hi - margin, hi
        return lo, hi

    def to_dict(self) -> Dict[str, Any]:
        return {"lower": self.lower, "upper": self.upper}


@dataclass(frozen=True)
class ModelSpec:
    """Model family plus its static parameter vector"""
    model_kind: ModelKind
    params: ModelParams

    @property
    def lag_order(self) -> int:
        return self.model_kind.lag_order

    @property
    def param_names(self) -> Tuple[str, ...]:
        return PARAMS_BY_KIND[self.model_kind].names

    def values(self) -> np.ndarray:
        return self.params.as_array()

    def with_values(self, values: Sequence[float]) -> 'ModelSpec':
        extra = {}
        if isinstance(self.params, TLocationParams):
            extra["narrow_bound"] = self.params.narrow_bound
        return ModelSpec(self.model_kind, PARAMS_BY_KIND[self.model_kind].from_array(values, **extra))

    def replace(self, **changes: float) -> 'ModelSpec':
        return ModelSpec(self.model_kind, self.params.replace(**changes))

    def to_dict(self) -> Dict[str, Any]:
        return {"model": self.model_kind.value, "params": self.params.to_dict()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ModelSpec':
        kind = ModelKind.from_string(data["model"])
        return cls(kind, PARAMS_BY_KIND[kind].from_dict(data["params"]))

    @classmethod
    def from_values(cls, model_kind: Union[str, ModelKind], values: Sequence[float], **extra: Any) -> 'ModelSpec':
        kind = ModelKind.from_string(model_kind)
        return cls(kind, PARAMS_BY_KIND[kind].from_array(values, **extra))


def param_validate(spec: ModelSpec) -> List[str]:
    """Return every violated admissibility constraint; an empty list means admissible"""
    expected = PARAMS_BY_KIND[spec.model_kind]
    if not isinstance(spec.params, expected):
        return [f"params must be {expected.__name__} for {spec.model_kind.value}"]
    return spec.params.violations()
