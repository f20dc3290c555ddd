import math
import click
from typing import Any, Dict, Optional, TextIO
from .levels import LogLevel


def _format_value(value: Any) -> str:
    """Render one structured field value"""
    if isinstance(value, float):
        if math.isfinite(value):
            return f"{value:.6g}"
        return str(value)
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_format_value(v) for v in value) + "]"
    return str(value)


class Logger:
    """Leveled logger backed by click.secho.

    Messages go to stderr unless an explicit stream is set, so that data
    written to stdout (``--out -``) is never mixed with diagnostics. Keyword
    fields are appended as ``key=value`` pairs.
    """

    _STYLES = {
        LogLevel.DEBUG: ('cyan', False),
        LogLevel.INFO: ('blue', False),
        LogLevel.SUCCESS: ('green', False),
        LogLevel.WARNING: ('yellow', False),
        LogLevel.ERROR: ('red', False),
        LogLevel.FATAL: ('red', True),
    }

    def __init__(self,
                 level: LogLevel = LogLevel.INFO,
                 show_level: bool = True,
                 out: Optional[TextIO] = None):
        self.level = level
        self.show_level = show_level
        self._out = out

    def set_level(self, level: LogLevel) -> None:
        self.level = level

    def set_level_from_string(self, level_str: str) -> None:
        self.set_level(LogLevel.from_string(level_str))

    def is_enabled(self, level: LogLevel) -> bool:
        return level.value >= self.level.value

    def is_debug(self) -> bool:
        return self.level == LogLevel.DEBUG

    def format(self, level: LogLevel, message: str, fields: Dict[str, Any]) -> str:
        """Build the output line for a record"""
        text = message
        if fields:
            text += " " + " ".join(f"{k}={_format_value(v)}" for k, v in fields.items())
        if self.show_level:
            text = f"{level.name.lower():<7} {text}"
        return text

    def _log(self, level: LogLevel, message: str, fields: Dict[str, Any]) -> None:
        if not self.is_enabled(level):
            return
        color, bold = self._STYLES[level]
        line = self.format(level, message, fields)
        if self._out is not None:
            click.secho(line, fg=color, bold=bold, file=self._out)
        else:
            click.secho(line, fg=color, bold=bold, err=True)

    def debug(self, message: str, **fields: Any) -> None:
        self._log(LogLevel.DEBUG, message, fields)

    def info(self, message: str, **fields: Any) -> None:
        self._log(LogLevel.INFO, message, fields)

    def success(self, message: str, **fields: Any) -> None:
        self._log(LogLevel.SUCCESS, message, fields)

    def warning(self, message: str, **fields: Any) -> None:
        self._log(LogLevel.WARNING, message, fields)

    def error(self, message: str, **fields: Any) -> None:
        self._log(LogLevel.ERROR, message, fields)

    def progress(self, message: str, done: int, total: int, **fields: Any) -> None:
        """Progress line for long loops, emitted at DEBUG"""
        self._log(LogLevel.DEBUG, f"{message} [{done}/{total}]", fields)
