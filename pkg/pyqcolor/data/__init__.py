"""
Data management module for PyQColor

Handles DIMACS graph files, result artifacts and the result archive.
"""

from pyqcolor.data.dimacs import load_dimacs, save_dimacs, read_dimacs_file, write_dimacs_file
from pyqcolor.data.results_io import (
    write_trace_csv,
    read_trace_csv,
    write_sweep_csv,
    read_sweep_csv,
    write_summary_json,
    read_summary_json,
    write_coloring,
    read_coloring,
)
from pyqcolor.data.result_archive import ResultArchive

__all__ = [
    "load_dimacs",
    "save_dimacs",
    "read_dimacs_file",
    "write_dimacs_file",
    "write_trace_csv",
    "read_trace_csv",
    "write_sweep_csv",
    "read_sweep_csv",
    "write_summary_json",
    "read_summary_json",
    "write_coloring",
    "read_coloring",
    "ResultArchive",
]
