"""
Dataset ingestion from CSV and series export
"""

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Union

import numpy as np
import pandas as pd

from log import debug
from ..errors import DataError
from .writers import write_csv


class Transform(Enum):
    NONE = "none"
    LOG_RETURN = "log_return"
    LOG_RETURN_X100 = "log_return_x100"

    @classmethod
    def from_string(cls, value: Union[str, 'Transform']) -> 'Transform':
        if isinstance(value, Transform):
            return value
        try:
            return cls(value.strip().lower())
        except ValueError:
            choices = ", ".join(t.value for t in cls)
            raise ValueError(f"Unknown transform: {value!r} (expected one of {choices})") from None

    def apply(self, values: np.ndarray) -> np.ndarray:
        if self is Transform.NONE:
            return values
        if len(values) < 2:
            raise DataError(f"{self.value} needs at least 2 rows, got {len(values)}")
        if np.any(values <= 0):
            bad = int(np.argmax(values <= 0))
            raise DataError(f"{self.value} needs positive prices, got {values[bad]!r} at data row {bad + 1}")
        returns = np.log(pd.Series(values)).diff().to_numpy()[1:]
        return 100.0 * returns if self is Transform.LOG_RETURN_X100 else returns


@dataclass
class Dataset:
    """Observations in chronological order"""
    name: str
    observations: np.ndarray
    transform: Transform = Transform.NONE
    source: Optional[str] = None

    @property
    def n(self) -> int:
        return len(self.observations)

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "n": self.n, "transform": self.transform.value, "source": self.source}


def _is_number(text: str) -> bool:
    try:
        float(text)
    except ValueError:
        return False
    return True


def _read_cells(path: Path) -> pd.DataFrame:
    """Every cell as a stripped string; the index is the 0-based file line"""
    try:
        raw = pd.read_csv(path, header=None, dtype=str, skip_blank_lines=False,
                          keep_default_na=False, encoding="utf-8")
    except pd.errors.EmptyDataError:
        raise DataError(f"{path} is empty") from None
    except (pd.errors.ParserError, UnicodeDecodeError) as e:
        raise DataError(f"cannot parse {path}: {e}") from None
    raw = raw.apply(lambda col: col.str.strip()).replace("", np.nan)
    return raw.dropna(how="all")


def _column_index(first: pd.Series, column: Union[str, int, None], path: Path):
    """Resolve ``column`` to a position and report whether the first row is a header"""
    names = ["" if pd.isna(h) else str(h) for h in first]
    if isinstance(column, str) and not column.strip().isdigit():
        if column not in names:
            raise DataError(f"column {column!r} not found in {path} (columns: {', '.join(names)})")
        return names.index(column), True
    idx = 0 if column is None else int(column)
    if idx < 0:
        raise DataError(f"column index must be >= 0, got {idx}")
    is_header = idx < len(names) and names[idx] != "" and not _is_number(names[idx])
    return idx, is_header


def _bad_cell(cell: Any, idx: int) -> str:
    if pd.isna(cell):
        return f"missing column {idx}"
    if _is_number(cell):
        return f"non-finite value {cell!r}"
    return f"non-numeric value {cell!r}"


def ingest_csv(path: Union[str, Path], column: Union[str, int, None] = None,
               transform: Union[str, Transform] = Transform.NONE, name: Optional[str] = None) -> Dataset:
    """Read one numeric column; the header row is detected from the first row.

    ``column`` is a header name or a 0-based index (default: first column).
    Row numbers in errors are 1-based file lines.
    """
    path = Path(path)
    transform = Transform.from_string(transform)
    if not path.exists():
        raise DataError(f"data file not found: {path}")
    raw = _read_cells(path)
    if raw.empty:
        raise DataError(f"{path} is empty")

    idx, has_header = _column_index(raw.iloc[0], column, path)
    body = raw.iloc[1:] if has_header else raw
    if body.empty:
        raise DataError(f"{path} has no data rows")
    if idx >= body.shape[1]:
        raise DataError(f"missing column {idx}", row=int(body.index[0]) + 1)

    cells = body.iloc[:, idx]
    numeric = pd.to_numeric(cells, errors="coerce")
    bad = ~np.isfinite(numeric.to_numpy(dtype=float, na_value=np.nan))
    if bad.any():
        line = cells.index[int(np.argmax(bad))]
        raise DataError(_bad_cell(cells.loc[line], idx), row=int(line) + 1)

    values = np.asarray(cells.tolist(), dtype=float)
    observations = transform.apply(values)
    dataset = Dataset(name=name or path.stem, observations=observations, transform=transform, source=str(path))
    debug("ingested", path=str(path), rows=len(values), n=dataset.n, transform=transform.value)
    return dataset


def export_csv(path: Union[str, Path], columns: Dict[str, Sequence[float]]) -> None:
    """Write equal-length columns with a header row, floats at 17 significant digits"""
    names = list(columns)
    lengths = {len(columns[n]) for n in names}
    if len(lengths) > 1:
        raise DataError("columns must have equal length")
    write_csv(path, names, zip(*(columns[n] for n in names)))
