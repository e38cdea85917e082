"""
Core module for PyQColor

Contains shared data models, enums, exceptions and the conflict energy.
"""

from pyqcolor.core.models import (
    Graph,
    Coloring,
    Energy,
    Schedule,
    AnnealConfig,
    TraceSample,
    RunResult,
    MultiRunConfig,
    MultiRunResult,
    SweepConfig,
    SweepRecord,
    SweepAnalysis,
    RunSummary,
    PRESETS,
)
from pyqcolor.core.enums import Preset, ArchiveBackend
from pyqcolor.core.exceptions import (
    QColorError,
    ParameterError,
    ContractError,
    VertexIndexError,
    DimacsParseError,
    OracleBudgetError,
    ArtifactFormatError,
)
from pyqcolor.core.energy import (
    full_energy,
    delta_energy,
    conflicts_at,
    conflicting_edges,
)
from pyqcolor.core.utils import derive_seed, derive_seeds

__all__ = [
    "Graph",
    "Coloring",
    "Energy",
    "Schedule",
    "AnnealConfig",
    "TraceSample",
    "RunResult",
    "MultiRunConfig",
    "MultiRunResult",
    "SweepConfig",
    "SweepRecord",
    "SweepAnalysis",
    "RunSummary",
    "PRESETS",
    "Preset",
    "ArchiveBackend",
    "QColorError",
    "ParameterError",
    "ContractError",
    "VertexIndexError",
    "DimacsParseError",
    "OracleBudgetError",
    "ArtifactFormatError",
    "full_energy",
    "delta_energy",
    "conflicts_at",
    "conflicting_edges",
    "derive_seed",
    "derive_seeds",
]
