"""
Output emitters. ``-`` as a target means stdout; logs stay on stderr.
"""

import json
import math
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence, TextIO, Union

import click
import numpy as np


def format_float(value: float) -> str:
    """17 significant digits; round-trips every double"""
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:.17g}"


def format_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return format_float(float(value))
    return str(value)


def jsonable(value: Any) -> Any:
    """Plain JSON types; non-finite floats become null"""
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [jsonable(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def write_csv(target: Union[str, Path], header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    with click.open_file(str(target), "w", encoding="utf-8") as f:
        f.write(",".join(header) + "\n")
        for row in rows:
            f.write(",".join(format_cell(v) for v in row) + "\n")


def write_json(target: Union[str, Path], payload: Any) -> None:
    with click.open_file(str(target), "w", encoding="utf-8") as f:
        f.write(json.dumps(jsonable(payload), indent=2, allow_nan=False))
        f.write("\n")


class OutputSink:
    """Destination for human-readable command output (tables, summaries)"""

    def __init__(self, out: Optional[TextIO] = None):
        self._out = out

    def print(self, *args: Any, **kwargs: Any) -> None:
        message = " ".join(str(arg) for arg in args)
        if self._out is not None:
            kwargs['file'] = self._out
        click.echo(message, **kwargs)

    def set_out(self, out: Optional[TextIO]) -> None:
        self._out = out

    def get_out(self) -> Optional[TextIO]:
        return self._out


def write_text(target: Union[str, Path], text: str) -> None:
    with click.open_file(str(target), "w", encoding="utf-8") as f:
        f.write(text)
