import traceback
from typing import Any, Dict, Optional, Tuple

from log import LogLevel, error, is_debug, set_level
from ..config.config_mgr import ConfigMgr
from ..errors import ConfigError, EXIT_NUMERICAL, EXIT_SUCCESS, InvertMLError
from ..invertml import InvertML
from ..io.writers import OutputSink


class InvertMLCLIHelper:
    """invertml command line helper class - handles CLI business logic"""

    COMMANDS = ("simulate", "fit", "region", "test", "diverge", "report")

    def __init__(self, sink: Optional[OutputSink] = None):
        self._sink = sink or OutputSink()

    def handle_debug_mode(self, debug: bool) -> None:
        if debug:
            set_level(LogLevel.DEBUG)
            self._sink.print("Debug mode enabled", err=True)
        else:
            set_level(LogLevel.INFO)

    def handle_version(self) -> None:
        from .. import __version__
        self._sink.print(f"invertml version: {__version__}")

    @staticmethod
    def build_overrides(options: Dict[str, Any], params: Tuple[str, ...] = ()) -> Dict[str, Any]:
        """Map CLI flags onto dotted configuration keys"""
        keys = {
            "data": "data.path",
            "column": "data.column",
            "transform": "data.transform",
            "model": "model",
            "delta": "delta",
            "alpha": "alpha",
            "bandwidth": "bandwidth",
            "seed": "seed",
            "n_starts": "n_starts",
            "constrained": "constrained",
            "out": "out",
        }
        overrides = {keys[k]: v for k, v in options.items() if k in keys and v is not None}
        if options.get("reference"):
            overrides["report.reference"] = True
        for item in params:
            name, sep, value = item.partition("=")
            if not sep:
                raise ConfigError(f"expected name=value, got {item!r}", field="--param")
            try:
                overrides[f"params.{name.strip()}"] = float(value)
            except ValueError:
                raise ConfigError(f"{value!r} is not a number", field=f"params.{name.strip()}") from None
        return overrides

    def handle_command(self, command: str, config_path: Optional[str], options: Dict[str, Any],
                       params: Tuple[str, ...] = ()) -> int:
        """Resolve the configuration, run the command and return the exit status"""
        try:
            overrides = self.build_overrides(options, params)
            config = ConfigMgr.get_instance().resolve(config_path, overrides)
            app = InvertML(config)
            getattr(app, f"cmd_{command}")()
            return EXIT_SUCCESS
        except InvertMLError as e:
            error(f"{command} failed: {e}")
            return e.exit_code
        except Exception as e:
            error(f"{command} failed: {type(e).__name__}: {e}")
            if is_debug():
                self._sink.print(traceback.format_exc(), err=True)
            return EXIT_NUMERICAL
