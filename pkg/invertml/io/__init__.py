"""Data ingestion and output emitters"""

from .dataset import Dataset, Transform, ingest_csv, export_csv
from .writers import OutputSink, format_float, format_cell, jsonable, write_csv, write_json, write_text

__all__ = [
    'Dataset',
    'Transform',
    'ingest_csv',
    'export_csv',
    'OutputSink',
    'format_float',
    'format_cell',
    'jsonable',
    'write_csv',
    'write_json',
    'write_text',
]
