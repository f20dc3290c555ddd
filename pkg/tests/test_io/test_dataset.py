#!/usr/bin/env python3
"""
Test CSV ingestion, transforms and export
"""

import sys
import io
import json
import shutil
import tempfile
from pathlib import Path

# Add project root directory to Python path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

import math

import numpy as np
import pytest

from invertml.errors import DataError
from invertml.io import OutputSink, Transform, export_csv, ingest_csv, write_json
from invertml.io.writers import format_cell, format_float


class TestIngestCsv:
    """Test ingest_csv against files in a temporary directory"""

    def setup_method(self):
        self.temp_dir = tempfile.mkdtemp()

    def teardown_method(self):
        shutil.rmtree(self.temp_dir)

    def _write(self, name, text):
        path = Path(self.temp_dir) / name
        path.write_text(text)
        return path

    def test_header_and_named_column(self):
        print("=== Testing Named Column Ingestion ===")
        path = self._write("prices.csv", "date,close\n2020-01,100\n2020-02,110\n2020-03,99\n")
        dataset = ingest_csv(path, column="close")
        np.testing.assert_allclose(dataset.observations, [100.0, 110.0, 99.0])
        assert dataset.name == "prices"
        assert dataset.source == str(path)
        print("✓ Header detected and column selected")

    def test_headerless_index_column(self):
        path = self._write("y.csv", "0.5,1\n-0.25,2\n\n1e-3,3\n")
        dataset = ingest_csv(path)
        np.testing.assert_allclose(dataset.observations, [0.5, -0.25, 1e-3])
        assert ingest_csv(path, column=1).observations.tolist() == [1.0, 2.0, 3.0]
        assert ingest_csv(path, column="1").observations.tolist() == [1.0, 2.0, 3.0]

    def test_log_returns(self):
        """Monthly prices 100 -> 110 give a return of 9.531 in percent"""
        path = self._write("p.csv", "close\n100\n110\n")
        dataset = ingest_csv(path, transform="log_return_x100", name="index")
        assert dataset.n == 1
        assert dataset.observations[0] == pytest.approx(9.531, abs=1e-3)
        assert dataset.name == "index"
        assert ingest_csv(path, transform=Transform.LOG_RETURN).observations[0] == pytest.approx(math.log(1.1))
        assert dataset.to_dict()["transform"] == "log_return_x100"

    @pytest.mark.parametrize("text,row", [
        ("y\n1.0\nabc\n", 3),
        ("y\n1.0\n2.0\nnan\n", 4),
        ("a,b\n1,2\n3\n", 3),
    ])
    def test_bad_cells_report_file_line(self, text, row):
        path = self._write("bad.csv", text)
        column = "b" if text.startswith("a,b") else None
        with pytest.raises(DataError) as e:
            ingest_csv(path, column=column)
        assert e.value.row == row

    def test_padded_cells_and_quoted_header(self):
        path = self._write("pad.csv", '"date","close"\n2020-01,  100 \n\n2020-02, 121\n')
        dataset = ingest_csv(path, column="close", transform="log_return")
        assert dataset.observations.tolist() == pytest.approx([math.log(1.21)])

    def test_row_with_extra_fields(self):
        with pytest.raises(DataError):
            ingest_csv(self._write("ragged.csv", "y\n1.0\n2.0,3.0,4.0\n"))

    def test_bad_cell_after_blank_lines(self):
        path = self._write("gap.csv", "y\n1.0\n\n\n2.0\ninf\n")
        with pytest.raises(DataError) as e:
            ingest_csv(path)
        assert e.value.row == 6
        assert "non-finite" in str(e.value)

    def test_unusable_files(self):
        with pytest.raises(DataError):
            ingest_csv(Path(self.temp_dir) / "missing.csv")
        with pytest.raises(DataError):
            ingest_csv(self._write("empty.csv", "\n\n"))
        with pytest.raises(DataError):
            ingest_csv(self._write("header.csv", "close\n"))
        with pytest.raises(DataError):
            ingest_csv(self._write("h.csv", "close\n1\n"), column="open")
        with pytest.raises(DataError):
            ingest_csv(self._write("neg.csv", "close\n100\n-5\n"), transform="log_return")
        with pytest.raises(DataError):
            ingest_csv(self._write("one.csv", "close\n100\n"), transform="log_return")

    def test_export_round_trip(self):
        path = Path(self.temp_dir) / "out.csv"
        export_csv(path, {"y": [0.1, 1.0 / 3.0, -2.5e-9]})
        lines = path.read_text().splitlines()
        assert lines[0] == "y"
        assert float(lines[2]) == 1.0 / 3.0
        assert ingest_csv(path, column="y").observations.tolist() == [0.1, 1.0 / 3.0, -2.5e-9]
        with pytest.raises(DataError):
            export_csv(path, {"a": [1.0], "b": [1.0, 2.0]})

    def test_json_nulls_for_non_finite(self):
        path = Path(self.temp_dir) / "out.json"
        write_json(path, {"value": math.inf, "flags": np.array([True, False]), "n": np.int64(3)})
        assert json.loads(path.read_text()) == {"value": None, "flags": [True, False], "n": 3}


def test_cell_formatting():
    assert format_float(math.nan) == "nan"
    assert format_float(-math.inf) == "-inf"
    assert float(format_float(0.1)) == 0.1
    assert format_cell(True) == "true"
    assert format_cell(None) == ""
    assert format_cell(np.bool_(False)) == "false"


def test_output_sink_redirect():
    buffer = io.StringIO()
    sink = OutputSink(buffer)
    sink.print("estimates", 3)
    assert buffer.getvalue() == "estimates 3\n"
    assert sink.get_out() is buffer
    sink.set_out(None)
    assert sink.get_out() is None
