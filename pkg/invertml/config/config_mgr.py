"""
Run configuration loading, overrides, validation and the resolved-config sidecar
"""

import json
import math
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Union

if sys.version_info >= (3, 11):
    import tomllib as tomli
else:
    import tomli
import tomli_w

from log import debug
from ..errors import ConfigError
from ..io.dataset import Transform
from ..models.types import ModelKind, PARAMS_BY_KIND
from .run_config import RunConfig


class ConfigMgr:
    """Loads and validates run configurations; keeps the last resolved one"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(ConfigMgr, cls).__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self):
        if self._initialized:
            return
        self.current: Optional[RunConfig] = None
        debug("Initializing ConfigMgr")
        self._initialized = True

    @classmethod
    def get_instance(cls) -> 'ConfigMgr':
        if cls._instance is None:
            cls._instance = cls()
        return cls._instance

    @classmethod
    def reset_instance(cls):
        """Reset singleton instance (mainly for testing)"""
        cls._instance = None

    def load_file(self, path: Union[str, Path]) -> Dict[str, Any]:
        """Read a JSON or TOML document into a dict"""
        path = Path(path)
        if not path.exists():
            raise ConfigError(f"configuration file not found: {path}", field="config")
        try:
            if path.suffix.lower() == ".toml":
                with open(path, "rb") as f:
                    return tomli.load(f)
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except (json.JSONDecodeError, tomli.TOMLDecodeError) as e:
            raise ConfigError(f"cannot parse {path}: {e}", field="config") from e
        if not isinstance(data, dict):
            raise ConfigError("top level must be an object", field="config")
        return data

    def resolve(self, path: Optional[Union[str, Path]] = None,
                overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
        """File (optional) + CLI overrides -> validated RunConfig"""
        data = self.load_file(path) if path is not None else {}
        config = RunConfig.from_dict(data)
        config = self.apply_overrides(config, overrides or {})
        self.validate(config)
        self.current = config
        debug("configuration resolved", source=str(path) if path else "defaults", model=config.model)
        return config

    def apply_overrides(self, config: RunConfig, overrides: Dict[str, Any]) -> RunConfig:
        """Overrides use dotted keys (``data.column``); None values are ignored"""
        merged = config.to_dict()
        for key, value in overrides.items():
            if value is None:
                continue
            node = merged
            parts = key.split(".")
            for part in parts[:-1]:
                node = node.setdefault(part, {})
            node[parts[-1]] = value
        return RunConfig.from_dict(merged)

    def validate(self, config: RunConfig) -> None:
        try:
            kind = ModelKind.from_string(config.model)
        except ValueError as e:
            raise ConfigError(str(e), field="model") from None
        names = PARAMS_BY_KIND[kind].names
        unknown = [p for p in config.params if p not in names]
        if unknown:
            raise ConfigError(f"not a parameter of {kind.value}", field=f"params.{unknown[0]}")
        if config.narrow_bound and kind is not ModelKind.T_LOCATION:
            raise ConfigError("only applies to t_location", field="narrow_bound")
        if not (config.delta > 0 and math.isfinite(config.delta)):
            raise ConfigError("must be > 0", field="delta")
        if not 0.0 < config.alpha <= 0.5:
            raise ConfigError("must lie in (0, 0.5]", field="alpha")
        if config.bandwidth is not None and config.bandwidth < 0:
            raise ConfigError("must be >= 0", field="bandwidth")
        if config.n_starts < 1:
            raise ConfigError("must be >= 1", field="n_starts")
        if config.f0 is not None and not math.isfinite(config.f0):
            raise ConfigError("must be finite", field="f0")
        if config.simulate.n < 1:
            raise ConfigError("must be >= 1", field="simulate.n")
        if config.simulate.burn_in < 0:
            raise ConfigError("must be >= 0", field="simulate.burn_in")
        for label in ("x", "y"):
            axis = getattr(config.region, label)
            if axis.name not in names:
                raise ConfigError(f"{axis.name!r} is not a parameter of {kind.value}", field=f"region.{label}.name")
            if not axis.lo < axis.hi:
                raise ConfigError("lo must be < hi", field=f"region.{label}")
            if axis.size < 2:
                raise ConfigError("must be >= 2", field=f"region.{label}.size")
        if config.region.x.name == config.region.y.name:
            raise ConfigError("axes must differ", field="region.y.name")
        if config.region.workers < 1:
            raise ConfigError("must be >= 1", field="region.workers")
        if config.diverge.offset == 0:
            raise ConfigError("must be non-zero", field="diverge.offset")
        datasets = [("data", config.data)] + [(f"report.datasets[{i}]", d) for i, d in enumerate(config.report.datasets)]
        for path, dataset in datasets:
            try:
                Transform.from_string(dataset.transform)
            except ValueError as e:
                raise ConfigError(str(e), field=f"{path}.transform") from None
        opt = config.optimizer
        if opt.max_iter < 1:
            raise ConfigError("must be >= 1", field="optimizer.max_iter")
        if not opt.tol_x > 0:
            raise ConfigError("must be > 0", field="optimizer.tol_x")
        if not opt.tol_f > 0:
            raise ConfigError("must be > 0", field="optimizer.tol_f")
        if opt.restarts < 0:
            raise ConfigError("must be >= 0", field="optimizer.restarts")
        if not opt.penalty_weights or any(not w > 0 for w in opt.penalty_weights):
            raise ConfigError("weights must be positive", field="optimizer.penalty_weights")
        if opt.workers < 1:
            raise ConfigError("must be >= 1", field="optimizer.workers")

    def dump(self, config: RunConfig, path: Union[str, Path]) -> Path:
        """Write the resolved configuration as TOML"""
        path = Path(path)
        with open(path, "wb") as f:
            tomli_w.dump(config.to_dict(), f)
        return path

    @staticmethod
    def sidecar_path(out: Union[str, Path]) -> Path:
        return Path(f"{out}.config.toml")
