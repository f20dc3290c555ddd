"""
Parameter-region lattices: empirical Lyapunov value, feasible condition and
confidence-set membership on a 2-D grid of two free parameters.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from log import debug, progress
from ..errors import ConfigError, DataError, DegenerateVarianceError, DomainError
from ..filtering.filter import as_series
from ..inference.boundary_test import MIN_OBSERVATIONS, boundary_test_from_terms, membership_from_test
from ..models.t_location import location_sup_bound
from ..models.types import ModelKind, ModelSpec, PARAMS_BY_KIND
from .lyapunov import DEFAULT_DELTA, feasible_condition_garch, lyapunov_terms

DEFAULT_GRID_SIZE = 101


class CellStatus:
    OK = "ok"
    INADMISSIBLE = "inadmissible"
    DEGENERATE = "degenerate"          # some Lambda_t = 0
    DOMAIN_ERROR = "domain_error"


@dataclass(frozen=True)
class AxisSpec:
    """One free parameter swept over [lo, hi]"""
    name: str
    lo: float
    hi: float

    def values(self, size: int) -> np.ndarray:
        return np.linspace(self.lo, self.hi, size)

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "lo": self.lo, "hi": self.hi}


@dataclass
class RegionCell:
    ix: int
    iy: int
    x: float
    y: float
    lyapunov: float = math.nan
    feasible: float = math.nan
    in_region: bool = False
    in_up: Optional[bool] = None
    in_lo: Optional[bool] = None
    t_stat: float = math.nan
    status: str = CellStatus.OK

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ix": self.ix, "iy": self.iy, "x": self.x, "y": self.y,
            "lyapunov": self.lyapunov, "feasible": self.feasible,
            "in_region": self.in_region, "in_up": self.in_up, "in_lo": self.in_lo,
            "t_stat": self.t_stat, "status": self.status,
        }


@dataclass
class RegionGrid:
    model_kind: ModelKind
    axis_x: AxisSpec
    axis_y: AxisSpec
    x_values: np.ndarray
    y_values: np.ndarray
    fixed: Dict[str, float]
    delta: float
    alpha: Optional[float]
    bandwidth: Optional[int]
    n: int
    cells: List[RegionCell] = field(default_factory=list)

    CSV_COLUMNS = ("x", "y", "lyapunov", "feasible", "in_region", "in_up", "in_lo")

    def cell(self, ix: int, iy: int) -> RegionCell:
        return self.cells[iy * len(self.x_values) + ix]

    def rows(self) -> List[Tuple]:
        """One CSV row per cell in lattice order (x fastest)"""
        return [(c.x, c.y, c.lyapunov, c.feasible, c.in_region, c.in_up, c.in_lo) for c in self.cells]

    def lyapunov_matrix(self) -> np.ndarray:
        """Cell values as a (len(y), len(x)) array"""
        return np.array([c.lyapunov for c in self.cells]).reshape(len(self.y_values), len(self.x_values))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "model": self.model_kind.value,
            "axis_x": {**self.axis_x.to_dict(), "values": self.x_values.tolist()},
            "axis_y": {**self.axis_y.to_dict(), "values": self.y_values.tolist()},
            "fixed": dict(self.fixed),
            "delta": self.delta,
            "alpha": self.alpha,
            "bandwidth": self.bandwidth,
            "n": self.n,
            "columns": list(self.CSV_COLUMNS),
            "cells": [c.to_dict() for c in self.cells],
        }


def feasible_value(spec: ModelSpec) -> float:
    """Data-free contraction bound on the log scale; NaN for tv_ar, which has none"""
    if spec.model_kind is ModelKind.BETA_T_GARCH:
        return feasible_condition_garch(spec.params)
    if spec.model_kind is ModelKind.T_LOCATION:
        bound = location_sup_bound(spec.params)
        return math.log(bound) if bound > 0 else -math.inf
    return math.nan


def _evaluate_cell(cell: RegionCell, series: np.ndarray, spec: ModelSpec, delta: float,
                   alpha: Optional[float], bandwidth: Optional[int]) -> RegionCell:
    if spec.params.violations():
        cell.status = CellStatus.INADMISSIBLE
        return cell
    cell.feasible = feasible_value(spec)
    try:
        terms = lyapunov_terms(series, spec)
    except DomainError:
        cell.status = CellStatus.DOMAIN_ERROR
        return cell
    if np.isneginf(terms).any():
        cell.status = CellStatus.DEGENERATE
        return cell
    mean = float(np.mean(terms))
    cell.lyapunov = mean
    cell.in_region = mean <= -delta
    if alpha is not None:
        try:
            membership = membership_from_test(boundary_test_from_terms(terms, bandwidth), alpha)
        except DegenerateVarianceError:
            # constant Lambda_t: T_n diverges with the sign of the mean
            cell.t_stat = -math.inf if mean < 0 else (math.inf if mean > 0 else math.nan)
            cell.in_up = cell.in_lo = mean < 0
        else:
            cell.t_stat = membership.test.t_stat
            cell.in_up = membership.in_up
            cell.in_lo = membership.in_lo
    return cell


def _check_axes(kind: ModelKind, axes: Sequence[AxisSpec], fixed: Mapping[str, Any]) -> None:
    names = PARAMS_BY_KIND[kind].names
    if len(axes) != 2:
        raise ConfigError("exactly two axes are required", field="region.axes")
    for label, axis in zip(("x", "y"), axes):
        if axis.name not in names:
            raise ConfigError(f"{axis.name!r} is not a parameter of {kind.value}", field=f"region.{label}.name")
        if not axis.lo < axis.hi:
            raise ConfigError(f"lo must be < hi, got [{axis.lo}, {axis.hi}]", field=f"region.{label}")
    if axes[0].name == axes[1].name:
        raise ConfigError("axes must name two distinct parameters", field="region.y.name")
    missing = [n for n in names if n not in fixed and n not in (axes[0].name, axes[1].name)]
    if missing:
        raise ConfigError(f"missing fixed values for {', '.join(missing)}", field="region.fixed")


def region_grid(series: Sequence[float], model_kind: Union[str, ModelKind], axes: Sequence[AxisSpec],
                fixed: Mapping[str, Any], delta: float = DEFAULT_DELTA, alpha: Optional[float] = None,
                grid_sizes: Tuple[int, int] = (DEFAULT_GRID_SIZE, DEFAULT_GRID_SIZE),
                bandwidth: Optional[int] = None, workers: int = 1) -> RegionGrid:
    """Evaluate the region lattice. Cell failures are recorded per cell, never raised."""
    kind = ModelKind.from_string(model_kind)
    _check_axes(kind, axes, fixed)
    if not delta > 0:
        raise ConfigError(f"delta must be > 0, got {delta}", field="delta")
    if alpha is not None and not 0.0 < alpha <= 0.5:
        raise ConfigError(f"alpha must lie in (0, 0.5], got {alpha}", field="alpha")
    if any(s < 2 for s in grid_sizes):
        raise ConfigError("grid sizes must be >= 2", field="region.size")

    names = PARAMS_BY_KIND[kind].names
    base = {n: float(fixed[n]) for n in names if n in fixed}
    extra = {}
    if kind is ModelKind.T_LOCATION and "narrow_bound" in fixed:
        extra["narrow_bound"] = bool(fixed["narrow_bound"])
    template = ModelSpec.from_values(kind, [base.get(n, 1.0) for n in names], **extra)
    arr = as_series(series, template)
    n = len(arr) - kind.lag_order
    if alpha is not None and n < MIN_OBSERVATIONS:
        raise DataError(f"confidence-set membership needs at least {MIN_OBSERVATIONS} observations, got {n}")

    ax, ay = axes
    xs, ys = ax.values(grid_sizes[0]), ay.values(grid_sizes[1])
    jobs = []
    for iy, yv in enumerate(ys.tolist()):
        for ix, xv in enumerate(xs.tolist()):
            values = dict(base)
            values[ax.name], values[ay.name] = xv, yv
            spec = ModelSpec.from_values(kind, [values[n] for n in names], **extra)
            jobs.append((RegionCell(ix=ix, iy=iy, x=xv, y=yv), spec))

    total = len(jobs)
    debug("region grid", model=kind.value, x=ax.name, y=ay.name, cells=total, workers=workers)

    def run(job):
        return _evaluate_cell(job[0], arr, job[1], delta, alpha, bandwidth)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(run, jobs))
    else:
        cells = []
        for i, job in enumerate(jobs, 1):
            cells.append(run(job))
            if i % len(xs) == 0:
                progress("region rows", i // len(xs), len(ys))

    return RegionGrid(model_kind=kind, axis_x=ax, axis_y=ay, x_values=xs, y_values=ys,
                      fixed={k: v for k, v in fixed.items() if k not in (ax.name, ay.name)},
                      delta=delta, alpha=alpha, bandwidth=bandwidth, n=n, cells=cells)
