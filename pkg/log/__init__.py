from typing import Any

from .core import Logger
from .levels import LogLevel

# Global logger instance
_global_logger = Logger()


def set_level(level: LogLevel) -> None:
    _global_logger.set_level(level)


def debug(message: str, **fields: Any) -> None:
    _global_logger.debug(message, **fields)


def info(message: str, **fields: Any) -> None:
    _global_logger.info(message, **fields)


def success(message: str, **fields: Any) -> None:
    _global_logger.success(message, **fields)


def warning(message: str, **fields: Any) -> None:
    _global_logger.warning(message, **fields)


def error(message: str, **fields: Any) -> None:
    _global_logger.error(message, **fields)


def progress(message: str, done: int, total: int, **fields: Any) -> None:
    _global_logger.progress(message, done, total, **fields)


def is_debug() -> bool:
    return _global_logger.is_debug()


__all__ = [
    'Logger',
    'LogLevel',
    'set_level',
    'debug',
    'info',
    'success',
    'warning',
    'error',
    'progress',
    'is_debug',
]
