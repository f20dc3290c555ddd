"""
Maximum-likelihood estimation over the admissible set and over the
estimated invertibility region, with a deterministic multi-start.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from log import debug, warning
from ..errors import DataError, DomainError, EstimationError, NumericalError
from ..filtering.filter import as_series, default_f0, log_likelihood
from ..invertibility.lyapunov import DEFAULT_DELTA, empirical_lyapunov
from ..models.transforms import param_transform, param_untransform
from ..models.types import ModelKind, ModelSpec, TLocationParams
from ..simulation.simulator import make_rng
from .optimizer import OptimizeOutcome, nelder_mead
from .types import EstimationResult, FitStatus, OptimizerOptions

MIN_FIT_OBSERVATIONS = 50
JITTER_SCALE = 0.5
BISECTION_STEPS = 40
DEGENERATE_VARIANCE = 1e-14

# (beta, alpha, gamma, v); omega is set from the sample variance
_GARCH_ANCHORS = (
    (0.70, 0.05, 0.05, 8.0),
    (0.85, 0.05, 0.05, 8.0),
    (0.50, 0.10, 0.10, 6.0),
    (0.90, 0.02, 0.03, 10.0),
    (0.60, 0.02, 0.20, 8.0),
    (0.80, 0.10, 0.01, 5.0),
    (0.40, 0.05, 0.30, 7.0),
    (0.95, 0.01, 0.01, 12.0),
)
# (beta, alpha, v); omega, sigma are set from the sample
_SCORE_ANCHORS = (
    (0.50, 0.05, 5.0),
    (0.90, 0.02, 8.0),
    (0.00, 0.10, 5.0),
    (0.70, 0.20, 10.0),
    (0.95, 0.01, 20.0),
    (0.30, 0.05, 4.0),
    (-0.30, 0.05, 6.0),
    (0.80, 0.50, 8.0),
)
N_ANCHORS = len(_GARCH_ANCHORS)


def _extra(kind: ModelKind, narrow_bound: bool) -> Dict[str, bool]:
    return {"narrow_bound": True} if kind is ModelKind.T_LOCATION and narrow_bound else {}


def anchor_specs(series: np.ndarray, model_kind: Union[str, ModelKind], narrow_bound: bool = False) -> List[ModelSpec]:
    """The documented start lattice, scaled to the sample; series holds y_{1-k}..y_n"""
    kind = ModelKind.from_string(model_kind)
    extra = _extra(kind, narrow_bound)
    y = np.asarray(series, dtype=float)[kind.lag_order:]
    var = float(np.var(y)) if len(y) > 1 else 1.0
    var = var if var > 0 else 1.0
    sd = math.sqrt(var)
    specs = []
    if kind is ModelKind.BETA_T_GARCH:
        for beta, alpha, gamma, v in _GARCH_ANCHORS:
            specs.append(ModelSpec.from_values(kind, [0.5 * var * (1.0 - beta), beta, alpha, gamma, v]))
    elif kind is ModelKind.TV_AR:
        ys = np.asarray(series, dtype=float)
        lag = ys[:-1]
        rho = float(np.dot(lag, ys[1:]) / np.dot(lag, lag)) if np.dot(lag, lag) > 0 else 0.0
        rho = min(max(rho, -0.95), 0.95)
        for beta, alpha, v in _SCORE_ANCHORS:
            specs.append(ModelSpec.from_values(kind, [rho * (1.0 - beta), beta, alpha, 0.9 * sd, v]))
    else:
        centre = float(np.median(y))
        for beta, alpha, v in _SCORE_ANCHORS:
            specs.append(ModelSpec.from_values(kind, [centre * (1.0 - beta), beta, alpha * sd, 0.8 * sd, v], **extra))
    return specs


def start_lattice(series: np.ndarray, model_kind: Union[str, ModelKind], n_starts: int, seed: int,
                  narrow_bound: bool = False) -> List[np.ndarray]:
    """Transformed starting points: the anchors first, then jittered anchors seeded by (seed, index)"""
    if n_starts < 1:
        raise EstimationError("n_starts must be >= 1")
    anchors = [param_transform(s) for s in anchor_specs(series, model_kind, narrow_bound)]
    starts = []
    for i in range(n_starts):
        x = anchors[i % N_ANCHORS].copy()
        if i >= N_ANCHORS:
            rng = make_rng(np.random.SeedSequence([int(seed), i]))
            x = x + JITTER_SCALE * rng.standard_normal(len(x))
        starts.append(x)
    return starts


class _Problem:
    """Likelihood and Lyapunov evaluation in transformed coordinates"""

    def __init__(self, series: np.ndarray, kind: ModelKind, f0: Optional[float], extra: Dict[str, bool]):
        self.series = series
        self.kind = kind
        self.f0 = f0
        self.extra = extra

    def spec(self, x: np.ndarray) -> ModelSpec:
        return param_untransform(x, self.kind, **self.extra)

    def loglik(self, x: np.ndarray) -> float:
        try:
            return log_likelihood(self.series, self.spec(x), self.f0)
        except NumericalError:
            return -math.inf

    def lyapunov(self, x: np.ndarray) -> float:
        return empirical_lyapunov(self.series, self.spec(x))

    def neg_loglik(self, x: np.ndarray) -> float:
        return -self.loglik(x)

    def penalised(self, weight: float, delta: float) -> Callable[[np.ndarray], float]:
        def objective(x: np.ndarray) -> float:
            excess = max(0.0, self.lyapunov(x) + delta)
            return -self.loglik(x) + weight * excess * excess
        return objective

    def hard_constrained(self, delta: float) -> Callable[[np.ndarray], float]:
        def objective(x: np.ndarray) -> float:
            if not self.lyapunov(x) <= -delta:
                return math.inf
            return -self.loglik(x)
        return objective

    def result(self, x: np.ndarray, outcome: OptimizeOutcome, status: str, **kw) -> EstimationResult:
        spec = self.spec(x)
        f0_used = self.f0 if self.f0 is not None else default_f0(self.series, spec)
        return EstimationResult(
            theta_hat=spec,
            loglik=self.loglik(x),
            lyapunov_at_hat=empirical_lyapunov(self.series, spec),
            status=status,
            iterations=outcome.iterations,
            restarts_used=outcome.restarts_used,
            f0_used=float(f0_used),
            f0_fixed=self.f0 is not None,
            **kw,
        )


def _prepare(series: Sequence[float], kind: ModelKind) -> np.ndarray:
    shape_params = {ModelKind.BETA_T_GARCH: [0.1, 0.5, 0.1, 0.1, 6.0]}.get(kind, [0.0, 0.5, 0.1, 1.0, 5.0])
    arr = as_series(series, ModelSpec.from_values(kind, shape_params))
    n = len(arr) - kind.lag_order
    if n < MIN_FIT_OBSERVATIONS:
        raise DataError(f"estimation needs at least {MIN_FIT_OBSERVATIONS} observations, got {n}")
    return arr


def _is_degenerate(arr: np.ndarray, kind: ModelKind) -> bool:
    """Zero sample variance: the likelihood grows without bound as the scale collapses"""
    y = arr[kind.lag_order:]
    return float(np.var(y)) <= DEGENERATE_VARIANCE * max(1.0, float(np.mean(y)) ** 2)


def _flag_degenerate(problem: _Problem, result: EstimationResult) -> EstimationResult:
    if not _is_degenerate(problem.series, problem.kind):
        return result
    warning("series has zero sample variance; the fit is not identified", model=problem.kind.value)
    return replace(result, status=FitStatus.FAILED,
                   message="series has zero sample variance; the likelihood has no interior maximum")


def _fit_from(problem: _Problem, x0: np.ndarray, options: OptimizerOptions, index: int = 0) -> EstimationResult:
    outcome = nelder_mead(problem.neg_loglik, x0, options)
    return problem.result(outcome.x, outcome, outcome.status, start_index=index, seed=options.seed)


def _fit_constrained_from(problem: _Problem, x0: np.ndarray, delta: float, options: OptimizerOptions,
                          index: int = 0) -> EstimationResult:
    base = _fit_from(problem, x0, options, index)
    if base.lyapunov_at_hat <= -delta:
        debug("constraint inactive", lyapunov=base.lyapunov_at_hat, delta=delta)
        return replace(base, constrained=True, delta=delta)

    x = param_transform(base.theta_hat)
    outcome = None
    for weight in options.penalty_weights:
        outcome = nelder_mead(problem.penalised(weight, delta), x, options)
        x = outcome.x
        debug("penalty stage", weight=weight, lyapunov=problem.lyapunov(x), loglik=problem.loglik(x))
    if problem.lyapunov(x) <= -delta and math.isfinite(problem.loglik(x)):
        return problem.result(x, outcome, outcome.status, constrained=True, delta=delta,
                              start_index=index, seed=options.seed)

    # pull the point back into the region along the segment to a contracting anchor
    anchor = _feasible_anchor(problem, x, delta)
    if anchor is None:
        warning("no feasible point found for the constrained fit", delta=delta)
        return problem.result(x, outcome, FitStatus.INFEASIBLE, constrained=True, delta=delta,
                              start_index=index, seed=options.seed,
                              message="no parameter value with empirical Lyapunov <= -delta was found")
    lo, hi = 0.0, 1.0
    for _ in range(BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        if problem.lyapunov(anchor + mid * (x - anchor)) <= -delta:
            lo = mid
        else:
            hi = mid
    x_feasible = anchor + lo * (x - anchor)
    outcome = nelder_mead(problem.hard_constrained(delta), x_feasible, options)
    status = outcome.status
    if not problem.lyapunov(outcome.x) <= -delta:
        status = FitStatus.INFEASIBLE
    return problem.result(outcome.x, outcome, status, constrained=True, delta=delta,
                          start_index=index, seed=options.seed)


def _feasible_anchor(problem: _Problem, x: np.ndarray, delta: float) -> Optional[np.ndarray]:
    """x with the persistence set to 1/2 and the score loadings switched (almost) off"""
    spec = problem.spec(x)
    if problem.kind is ModelKind.BETA_T_GARCH:
        candidate = spec.replace(beta=0.5, alpha=1e-6, gamma=1e-6)
    else:
        candidate = spec.replace(beta=0.5, alpha=0.0)
    xa = param_transform(candidate)
    if problem.lyapunov(xa) <= -delta and math.isfinite(problem.loglik(xa)):
        return xa
    return None


def _first_finite(problem: _Problem, candidates: Sequence[np.ndarray]) -> Tuple[int, np.ndarray]:
    for i, x in enumerate(candidates):
        if math.isfinite(problem.loglik(x)):
            return i, x
    raise EstimationError("no starting point gives a finite log-likelihood")


def _setup(series, model_kind, start, f0, options, narrow_bound):
    kind = ModelKind.from_string(model_kind)
    options = options or OptimizerOptions()
    options.validate()
    arr = _prepare(series, kind)
    if start is not None:
        if start.model_kind is not kind:
            raise EstimationError(f"start is a {start.model_kind.value} spec, expected {kind.value}")
        violations = start.params.violations()
        if violations:
            raise EstimationError(f"inadmissible start: {', '.join(violations)}")
        narrow_bound = narrow_bound or (isinstance(start.params, TLocationParams) and start.params.narrow_bound)
    problem = _Problem(arr, kind, None if f0 is None else float(f0), _extra(kind, narrow_bound))
    candidates = [param_transform(s) for s in anchor_specs(arr, kind, narrow_bound)]
    if start is not None:
        candidates.insert(0, param_transform(start))
    return problem, options, candidates


def fit_ml(series: Sequence[float], model_kind: Union[str, ModelKind], start: Optional[ModelSpec] = None,
           f0: Optional[float] = None, options: Optional[OptimizerOptions] = None,
           narrow_bound: bool = False) -> EstimationResult:
    """Maximise the average log-likelihood over the admissible parameter set"""
    problem, options, candidates = _setup(series, model_kind, start, f0, options, narrow_bound)
    index, x0 = _first_finite(problem, candidates)
    result = _flag_degenerate(problem, _fit_from(problem, x0, options, index))
    debug("fit_ml", model=problem.kind.value, loglik=result.loglik, status=result.status)
    return result


def fit_ml_constrained(series: Sequence[float], model_kind: Union[str, ModelKind], delta: float = DEFAULT_DELTA,
                       start: Optional[ModelSpec] = None, f0: Optional[float] = None,
                       options: Optional[OptimizerOptions] = None, narrow_bound: bool = False) -> EstimationResult:
    """Maximise the log-likelihood subject to empirical Lyapunov <= -delta.

    Exterior penalty with escalating weights, then a feasibility audit. A
    penalised optimum that still violates the constraint is moved back into
    the region and re-polished with the constraint enforced exactly.
    """
    if not delta > 0:
        raise DomainError(f"delta must be > 0, got {delta}")
    problem, options, candidates = _setup(series, model_kind, start, f0, options, narrow_bound)
    index, x0 = _first_finite(problem, candidates)
    result = _flag_degenerate(problem, _fit_constrained_from(problem, x0, delta, options, index))
    debug("fit_ml_constrained", model=problem.kind.value, loglik=result.loglik,
          lyapunov=result.lyapunov_at_hat, status=result.status)
    return result


def _pick_best(values: Sequence[float], eligible: Sequence[bool]) -> Optional[int]:
    """Index of the largest eligible finite value; ties go to the lowest index"""
    best = None
    for i, (value, ok) in enumerate(zip(values, eligible)):
        if ok and math.isfinite(value) and (best is None or value > values[best]):
            best = i
    return best


def best_of_starts(objective: Callable[[np.ndarray], float], starts: Sequence[np.ndarray],
                   options: Optional[OptimizerOptions] = None) -> Tuple[int, OptimizeOutcome]:
    """Minimise ``objective`` from each start and keep the lowest converged value"""
    outcomes = []
    for x0 in starts:
        try:
            outcomes.append(nelder_mead(objective, x0, options))
        except EstimationError:
            outcomes.append(None)
    values = [-o.value if o is not None else -math.inf for o in outcomes]
    best = _pick_best(values, [o is not None and o.converged for o in outcomes])
    if best is None:
        best = _pick_best(values, [o is not None for o in outcomes])
    if best is None:
        raise EstimationError("every start failed")
    return best, outcomes[best]


def multi_start(series: Sequence[float], model_kind: Union[str, ModelKind], n_starts: int = N_ANCHORS,
                seed: int = 0, constrained: bool = False, delta: float = DEFAULT_DELTA,
                f0: Optional[float] = None, options: Optional[OptimizerOptions] = None,
                narrow_bound: bool = False) -> EstimationResult:
    """Fit from every point of the start lattice and return the best converged result"""
    if constrained and not delta > 0:
        raise DomainError(f"delta must be > 0, got {delta}")
    problem, options, _ = _setup(series, model_kind, None, f0, options, narrow_bound)
    options = replace(options, seed=int(seed))
    starts = start_lattice(problem.series, problem.kind, n_starts, seed, narrow_bound)

    def run(job: Tuple[int, np.ndarray]) -> Optional[EstimationResult]:
        index, x0 = job
        try:
            if constrained:
                return _fit_constrained_from(problem, x0, delta, options, index)
            return _fit_from(problem, x0, options, index)
        except EstimationError as e:
            debug("start failed", index=index, reason=str(e))
            return None

    jobs = list(enumerate(starts))
    if options.workers > 1:
        with ThreadPoolExecutor(max_workers=options.workers) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(job) for job in jobs]

    values = [r.loglik if r is not None else -math.inf for r in results]
    best = _pick_best(values, [r is not None and r.converged and r.feasible for r in results])
    if best is None:
        best = _pick_best(values, [r is not None and r.feasible for r in results])
        if best is not None:
            warning("no start converged; returning the best non-converged fit", start=best)
    if best is None and constrained:
        best = _pick_best(values, [r is not None for r in results])
    if best is None:
        raise EstimationError(f"all {n_starts} starts failed to produce a finite likelihood")
    chosen = results[best]
    debug("multi_start", starts=n_starts, best=best, loglik=chosen.loglik)
    return _flag_degenerate(problem, replace(chosen, restarts_used=n_starts, seed=int(seed)))
