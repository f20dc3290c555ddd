from .run_config import (
    RunConfig,
    DataConfig,
    SimulateConfig,
    AxisConfig,
    RegionConfig,
    DivergeConfig,
    ReportConfig,
    OptimizerConfig,
)
from .config_mgr import ConfigMgr

__all__ = [
    'RunConfig',
    'DataConfig',
    'SimulateConfig',
    'AxisConfig',
    'RegionConfig',
    'DivergeConfig',
    'ReportConfig',
    'OptimizerConfig',
    'ConfigMgr',
]
