"""
InvertML core functionality: one method per command
"""

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np

from log import info, success, warning
from .config.config_mgr import ConfigMgr
from .config.run_config import DataConfig, RunConfig
from .errors import ConfigError, DataError, NumericalError
from .estimation import EstimationResult, OptimizerOptions, multi_start, with_standard_errors
from .filtering import default_f0, divergence_diagnostic, run_filter
from .inference import confidence_membership, invertibility_test
from .invertibility import (
    REFERENCE_ROWS,
    AxisSpec,
    RegionGrid,
    empirical_lyapunov,
    feasible_condition_garch,
    feasible_value,
    region_grid,
)
from .io import Dataset, export_csv, ingest_csv, write_csv, write_json, write_text
from .models import BetaTGarchParams, ModelFactory, ModelKind, ModelSpec, PARAMS_BY_KIND, param_validate
from .simulation import SimOutput, simulate, stationarity_report

STDOUT = "-"
STATIONARITY_DRAWS = 100_000


@dataclass
class ReportRow:
    """One fitted line of the estimates table"""
    name: str
    n: int
    result: EstimationResult
    feasible: float
    empirical: float
    p_left: float
    t_stat: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "n": self.n,
            "params": self.result.theta_hat.params.to_dict(),
            "std_errors": self.result.std_errors,
            "feasible": self.feasible,
            "empirical": self.empirical,
            "p_left": self.p_left,
            "t_stat": self.t_stat,
            "fit": self.result.to_dict(),
        }


@dataclass
class Report:
    rows: List[ReportRow] = field(default_factory=list)
    reference: bool = False

    def to_dict(self) -> Dict[str, Any]:
        if self.reference:
            return {"reference": [r.to_dict() for r in REFERENCE_ROWS],
                    "feasible_recomputed": {r.name: feasible_condition_garch(r.params) for r in REFERENCE_ROWS}}
        return {"rows": [r.to_dict() for r in self.rows]}


class InvertML:
    """Runs commands against a resolved RunConfig"""

    def __init__(self, config: RunConfig):
        self.config = config
        self.kind = ModelKind.from_string(config.model)

    # ---- helpers ----

    def _spec(self) -> ModelSpec:
        names = PARAMS_BY_KIND[self.kind].names
        missing = [n for n in names if n not in self.config.params]
        if missing:
            raise ConfigError("missing value", field=f"params.{missing[0]}")
        extra = {"narrow_bound": True} if self.config.narrow_bound else {}
        spec = ModelSpec.from_values(self.kind, [self.config.params[n] for n in names], **extra)
        violations = param_validate(spec)
        if violations:
            raise ConfigError(f"inadmissible parameters: {', '.join(violations)}", field="params")
        return spec

    def _dataset(self, data: Optional[DataConfig] = None) -> Dataset:
        data = data or self.config.data
        if not data.path:
            raise ConfigError("a data file is required", field="data.path")
        return ingest_csv(data.path, data.column, data.transform, data.name)

    def _options(self) -> OptimizerOptions:
        opt = self.config.optimizer
        return OptimizerOptions(max_iter=opt.max_iter, tol_x=opt.tol_x, tol_f=opt.tol_f, restarts=opt.restarts,
                                penalty_weights=tuple(opt.penalty_weights), seed=self.config.seed,
                                initial_step=opt.initial_step, workers=opt.workers)

    def _target(self, default: str) -> str:
        return self.config.out or default

    def _sibling(self, target: str, suffix: str) -> Optional[Path]:
        if target == STDOUT:
            return None
        path = Path(target)
        return path.with_name(path.stem + suffix)

    def _finish(self, target: str) -> None:
        """Write the resolved configuration next to the output"""
        if target == STDOUT:
            return
        ConfigMgr.get_instance().dump(self.config, ConfigMgr.sidecar_path(target))
        success(f"wrote {target}")

    def _fit(self, series: np.ndarray) -> EstimationResult:
        cfg = self.config
        result = multi_start(series, self.kind, n_starts=cfg.n_starts, seed=cfg.seed,
                             constrained=cfg.constrained, delta=cfg.delta, f0=cfg.f0,
                             options=self._options(), narrow_bound=cfg.narrow_bound)
        if result.converged and cfg.report.std_errors:
            try:
                result = with_standard_errors(series, result)
            except NumericalError as e:
                warning(f"standard errors unavailable: {e}")
        return result

    # ---- commands ----

    def cmd_simulate(self) -> SimOutput:
        spec = self._spec()
        cfg = self.config
        sim = simulate(spec, cfg.simulate.n, cfg.seed, cfg.simulate.burn_in)
        if self.kind is ModelKind.BETA_T_GARCH:
            report = stationarity_report(spec.params, mc_draws=STATIONARITY_DRAWS, seed=cfg.seed)
            info("stationarity", e_log_c=report.e_log_c, se=report.e_log_c_se, stationary=report.stationary)
        target = self._target("simulated.csv")
        export_csv(target, {"y": sim.series})
        true_path = self._sibling(target, ".true_path.csv")
        if true_path is None:
            warning("true path not written when the series goes to stdout")
        else:
            export_csv(true_path, {"f": sim.true_path})
        self._finish(target)
        return sim

    def cmd_fit(self) -> EstimationResult:
        dataset = self._dataset()
        result = self._fit(dataset.observations)
        info("fit finished", loglik=result.loglik, lyapunov=result.lyapunov_at_hat,
             status=result.status, constrained=result.constrained)
        target = self._target("fit.json")
        write_json(target, {"dataset": dataset.to_dict(), "result": result.to_dict(),
                            "optimizer": self._options().to_dict(), "n_starts": self.config.n_starts})
        self._finish(target)
        return result

    def cmd_region(self) -> RegionGrid:
        cfg = self.config
        dataset = self._dataset()
        rc = cfg.region
        fixed: Dict[str, Any] = dict(cfg.params)
        if cfg.narrow_bound:
            fixed["narrow_bound"] = True
        grid = region_grid(dataset.observations, self.kind,
                           (AxisSpec(rc.x.name, rc.x.lo, rc.x.hi), AxisSpec(rc.y.name, rc.y.lo, rc.y.hi)),
                           fixed, delta=cfg.delta, alpha=cfg.alpha if rc.membership else None,
                           grid_sizes=(rc.x.size, rc.y.size), bandwidth=cfg.bandwidth, workers=rc.workers)
        inside = sum(c.in_region for c in grid.cells)
        info("region grid", cells=len(grid.cells), in_region=inside)
        target = self._target("region.csv")
        write_csv(target, RegionGrid.CSV_COLUMNS, grid.rows())
        envelope = self._sibling(target, ".json")
        if envelope is not None:
            write_json(envelope, {"dataset": dataset.to_dict(), **grid.to_dict()})
        self._finish(target)
        return grid

    def cmd_test(self):
        cfg = self.config
        dataset = self._dataset()
        spec = self._spec()
        membership = confidence_membership(dataset.observations, spec, cfg.alpha, cfg.bandwidth)
        lyapunov = empirical_lyapunov(dataset.observations, spec)
        info("boundary test", t_stat=membership.test.t_stat, p_left=membership.test.p_left,
             in_up=membership.in_up, in_lo=membership.in_lo)
        target = self._target("test.json")
        write_json(target, {"dataset": dataset.to_dict(), "spec": spec.to_dict(), "lyapunov": lyapunov,
                            "delta": cfg.delta, "in_region": lyapunov <= -cfg.delta, **membership.to_dict()})
        self._finish(target)
        return membership

    def _second_start(self, spec: ModelSpec, f0_a: float) -> float:
        domain = ModelFactory.create_model(spec).domain()
        offset = self.config.diverge.offset
        for candidate in (f0_a + offset, f0_a - offset):
            if domain.contains(candidate):
                return candidate
        far = domain.upper if abs(domain.upper - f0_a) >= abs(f0_a - domain.lower) else domain.lower
        if far == f0_a:
            raise ConfigError("cannot find a second initialisation inside the filter domain", field="diverge.f0_b")
        return far

    def cmd_diverge(self):
        cfg = self.config
        dataset = self._dataset()
        spec = self._spec()
        series = dataset.observations
        f0_a = cfg.diverge.f0_a if cfg.diverge.f0_a is not None else default_f0(series, spec)
        f0_b = cfg.diverge.f0_b if cfg.diverge.f0_b is not None else self._second_start(spec, f0_a)
        diag = divergence_diagnostic(series, spec, f0_a, f0_b)
        path_a = run_filter(series, spec, f0_a).values
        path_b = run_filter(series, spec, f0_b).values
        info("divergence", log_slope=diag.log_slope, vanished=diag.vanished,
             lyapunov=empirical_lyapunov(series, spec))
        target = self._target("diverge.csv")
        write_csv(target, ("t", "f_a", "f_b", "abs_diff"),
                  zip(range(len(path_a)), path_a.tolist(), path_b.tolist(), diag.abs_diff.tolist()))
        self._finish(target)
        return diag

    def _report_row(self, dataset: Dataset) -> ReportRow:
        result = self._fit(dataset.observations)
        try:
            test = invertibility_test(dataset.observations, result.theta_hat, self.config.bandwidth)
            p_left, t_stat = test.p_left, test.t_stat
        except (NumericalError, DataError) as e:
            warning(f"{dataset.name}: boundary test unavailable: {e}")
            p_left = t_stat = math.nan
        return ReportRow(name=dataset.name, n=dataset.n, result=result,
                         feasible=feasible_value(result.theta_hat), empirical=result.lyapunov_at_hat,
                         p_left=p_left, t_stat=t_stat)

    def cmd_report(self) -> Report:
        cfg = self.config
        datasets = list(cfg.report.datasets)
        if not datasets and cfg.data.path:
            datasets = [cfg.data]
        report = Report(reference=cfg.report.reference or not datasets)
        if not report.reference:
            for i, data in enumerate(datasets, 1):
                dataset = self._dataset(data)
                info(f"fitting {dataset.name}", dataset=i, of=len(datasets))
                report.rows.append(self._report_row(dataset))
        target = self._target(STDOUT)
        suffix = Path(target).suffix.lower() if target != STDOUT else ""
        if suffix == ".json":
            write_json(target, report.to_dict())
        else:
            write_text(target, render_report(report, self.kind))
        self._finish(target)
        return report


def _cell(value: Optional[float], width: int = 9, digits: int = 3) -> str:
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return "-".rjust(width)
    return f"{value:{width}.{digits}f}"


def render_report(report: Report, kind: ModelKind = ModelKind.BETA_T_GARCH) -> str:
    """Estimates table: one parameter row per dataset with standard errors beneath"""
    names = list(BetaTGarchParams.names) if report.reference else list(PARAMS_BY_KIND[kind].names)
    header = f"{'':<10}" + "".join(f"{n:>9}" for n in names) + f"{'(cc)':>9}{'(ec)':>9}{'p-value':>9}"
    lines = [header]
    if report.reference:
        for row in REFERENCE_ROWS:
            values = row.params.as_array().tolist()
            lines.append(f"{row.name:<10}" + "".join(_cell(v) for v in values)
                         + _cell(feasible_condition_garch(row.params)) + _cell(row.empirical) + _cell(row.p_value))
            lines.append(f"{'':<10}" + "".join(f"{'(' + format(s, '.3f') + ')':>9}" for s in row.std_errors))
        return "\n".join(lines) + "\n"
    for row in report.rows:
        spec = row.result.theta_hat
        values = spec.values().tolist()
        lines.append(f"{row.name:<10}" + "".join(_cell(v) for v in values)
                     + _cell(row.feasible) + _cell(row.empirical) + _cell(row.p_left))
        se = row.result.std_errors
        if se:
            lines.append(f"{'':<10}" + "".join(f"{'(' + format(se[n], '.3f') + ')':>9}" for n in spec.param_names))
    return "\n".join(lines) + "\n"

