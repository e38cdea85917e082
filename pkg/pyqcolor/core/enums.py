"""
Enumerations and constants for PyQColor

Defines annealing presets and result archive backends.
"""

from enum import Enum


class Preset(Enum):
    """Named parameter sets for the annealing schedule."""
    PAPER_1E6 = "paper-1e6"  # 10^6 iterations, plottable traces
    PAPER_1E9 = "paper-1e9"  # 10^9 iterations, best quality


class ArchiveBackend(Enum):
    """Storage engines used by the result archive."""
    DUCKDB = "duckdb"
    TINYDB = "tinydb"
    JSON = "json"


# Constants of the beta growth factor (OFFSET + N/n) / BASE
SCHEDULE_OFFSET = 0.2
SCHEDULE_BASE = 0.2

# Guards for the exhaustive oracle
ORACLE_MAX_VERTICES_COUNT = 16
ORACLE_MAX_VERTICES_HMIN = 12
ORACLE_MAX_ASSIGNMENTS = 1 << 26

TRACE_POINTS_TARGET = 1000

CSV_SCHEMA_VERSION = "1"
