"""
Estimation types - optimizer options and estimation results
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from ..errors import ConfigError
from ..models.types import ModelSpec


class FitStatus:
    CONVERGED = "converged"
    MAX_ITER = "max_iter"
    INFEASIBLE = "infeasible"
    FAILED = "failed"


@dataclass(frozen=True)
class OptimizerOptions:
    """Nelder-Mead and restart settings shared by every fit"""
    max_iter: int = 4000
    tol_x: float = 1e-7
    tol_f: float = 1e-10
    restarts: int = 2
    penalty_weights: Tuple[float, ...] = (1e2, 1e4, 1e6)
    seed: int = 0
    initial_step: float = 0.25
    workers: int = 1

    def validate(self) -> None:
        if not self.max_iter >= 1:
            raise ConfigError("must be >= 1", field="optimizer.max_iter")
        if not (self.tol_x > 0 and math.isfinite(self.tol_x)):
            raise ConfigError("must be > 0", field="optimizer.tol_x")
        if not (self.tol_f > 0 and math.isfinite(self.tol_f)):
            raise ConfigError("must be > 0", field="optimizer.tol_f")
        if self.restarts < 0:
            raise ConfigError("must be >= 0", field="optimizer.restarts")
        if not self.penalty_weights or any(not w > 0 for w in self.penalty_weights):
            raise ConfigError("weights must be positive", field="optimizer.penalty_weights")
        if not self.initial_step > 0:
            raise ConfigError("must be > 0", field="optimizer.initial_step")
        if self.workers < 1:
            raise ConfigError("must be >= 1", field="optimizer.workers")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "max_iter": self.max_iter,
            "tol_x": self.tol_x,
            "tol_f": self.tol_f,
            "restarts": self.restarts,
            "penalty_weights": list(self.penalty_weights),
            "seed": self.seed,
            "initial_step": self.initial_step,
            "workers": self.workers,
        }


@dataclass
class EstimationResult:
    """Fitted parameters plus the metadata needed to audit and reproduce the fit"""
    theta_hat: ModelSpec
    loglik: float
    lyapunov_at_hat: float
    status: str
    iterations: int = 0
    restarts_used: int = 0
    constrained: bool = False
    delta: Optional[float] = None
    f0_used: Optional[float] = None
    f0_fixed: bool = False
    start_index: int = 0
    seed: Optional[int] = None
    std_errors: Optional[Dict[str, float]] = None
    hessian_ok: Optional[bool] = None
    message: str = ""
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def converged(self) -> bool:
        return self.status == FitStatus.CONVERGED

    @property
    def feasible(self) -> bool:
        """Constraint audit; always true for unconstrained fits"""
        if not self.constrained:
            return True
        return self.lyapunov_at_hat <= -self.delta

    def to_dict(self) -> Dict[str, Any]:
        return {
            "theta_hat": self.theta_hat.to_dict(),
            "loglik": self.loglik,
            "lyapunov_at_hat": self.lyapunov_at_hat,
            "status": self.status,
            "converged": self.converged,
            "iterations": self.iterations,
            "restarts_used": self.restarts_used,
            "constrained": self.constrained,
            "delta": self.delta,
            "feasible": self.feasible,
            "f0_used": self.f0_used,
            "f0_fixed": self.f0_fixed,
            "start_index": self.start_index,
            "seed": self.seed,
            "std_errors": self.std_errors,
            "hessian_ok": self.hessian_ok,
            "message": self.message,
            **self.extra,
        }
