"""
Run configuration schema shared by every command
"""

import dataclasses
import typing
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

from ..errors import ConfigError


@dataclass
class DataConfig:
    path: Optional[str] = None
    column: Union[str, int, None] = None
    transform: str = "none"
    name: Optional[str] = None


@dataclass
class SimulateConfig:
    n: int = 1000
    burn_in: int = 1000


@dataclass
class AxisConfig:
    name: str = ""
    lo: float = 0.0
    hi: float = 1.0
    size: int = 101


@dataclass
class RegionConfig:
    x: AxisConfig = field(default_factory=lambda: AxisConfig("alpha", 0.0, 0.3))
    y: AxisConfig = field(default_factory=lambda: AxisConfig("beta", 0.0, 0.99))
    membership: bool = True
    workers: int = 1


@dataclass
class DivergeConfig:
    f0_a: Optional[float] = None
    f0_b: Optional[float] = None
    offset: float = 10.0


@dataclass
class ReportConfig:
    datasets: List[DataConfig] = field(default_factory=list)
    std_errors: bool = True
    reference: bool = False


@dataclass
class OptimizerConfig:
    max_iter: int = 4000
    tol_x: float = 1e-7
    tol_f: float = 1e-10
    restarts: int = 2
    penalty_weights: Tuple[float, ...] = (1e2, 1e4, 1e6)
    initial_step: float = 0.25
    workers: int = 1


@dataclass
class RunConfig:
    """Everything a command needs; validated before any computation"""
    model: str = "beta_t_garch"
    params: Dict[str, float] = field(default_factory=dict)
    narrow_bound: bool = False
    seed: int = 0
    delta: float = 0.01
    alpha: float = 0.05
    bandwidth: Optional[int] = None
    n_starts: int = 8
    constrained: bool = False
    f0: Optional[float] = None
    out: Optional[str] = None
    data: DataConfig = field(default_factory=DataConfig)
    simulate: SimulateConfig = field(default_factory=SimulateConfig)
    region: RegionConfig = field(default_factory=RegionConfig)
    diverge: DivergeConfig = field(default_factory=DivergeConfig)
    report: ReportConfig = field(default_factory=ReportConfig)
    optimizer: OptimizerConfig = field(default_factory=OptimizerConfig)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RunConfig':
        return _build(cls, data, "")

    def to_dict(self) -> Dict[str, Any]:
        """Plain nested dict without None values (TOML has no null)"""
        return _strip_none(dataclasses.asdict(self))


def _strip_none(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: _strip_none(v) for k, v in value.items() if v is not None}
    if isinstance(value, (list, tuple)):
        return [_strip_none(v) for v in value]
    return value


def _join(path: str, name: str) -> str:
    return f"{path}.{name}" if path else name


def _coerce(tp: Any, value: Any, path: str) -> Any:
    origin = typing.get_origin(tp)
    args = typing.get_args(tp)
    if origin is Union:
        if value is None and type(None) in args:
            return None
        for arg in args:
            if arg is type(None):
                continue
            try:
                return _coerce(arg, value, path)
            except ConfigError:
                continue
        raise ConfigError(f"unexpected value {value!r}", field=path)
    if dataclasses.is_dataclass(tp):
        if not isinstance(value, dict):
            raise ConfigError("expected a table", field=path)
        return _build(tp, value, path)
    if origin in (list, List):
        if not isinstance(value, list):
            raise ConfigError("expected a list", field=path)
        return [_coerce(args[0], v, f"{path}[{i}]") for i, v in enumerate(value)]
    if origin in (tuple, Tuple):
        if not isinstance(value, (list, tuple)):
            raise ConfigError("expected a list", field=path)
        return tuple(_coerce(args[0], v, f"{path}[{i}]") for i, v in enumerate(value))
    if origin in (dict, Dict):
        if not isinstance(value, dict):
            raise ConfigError("expected a table", field=path)
        return {str(k): _coerce(args[1], v, _join(path, str(k))) for k, v in value.items()}
    if tp is bool:
        if not isinstance(value, bool):
            raise ConfigError(f"expected true/false, got {value!r}", field=path)
        return value
    if tp is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError(f"expected an integer, got {value!r}", field=path)
        return value
    if tp is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"expected a number, got {value!r}", field=path)
        return float(value)
    if tp is str:
        if not isinstance(value, str):
            raise ConfigError(f"expected a string, got {value!r}", field=path)
        return value
    raise ConfigError(f"unsupported type {tp!r}", field=path)


def _build(cls, data: Dict[str, Any], path: str):
    hints = typing.get_type_hints(cls)
    known = {f.name for f in dataclasses.fields(cls)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError("unknown key", field=_join(path, unknown[0]))
    kwargs = {name: _coerce(hints[name], value, _join(path, name)) for name, value in data.items()}
    return cls(**kwargs)
