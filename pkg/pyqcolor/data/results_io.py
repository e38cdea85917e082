"""
Result artifacts for PyQColor

Readers and writers for the trace CSV, the sweep CSV, the run summary JSON
and plain-text colorings. Every writer has a matching reader.
"""

import csv
import logging
from pathlib import Path
from typing import Iterable, List, Union

from pydantic import ValidationError

from pyqcolor.core.exceptions import ArtifactFormatError
from pyqcolor.core.models import Coloring, RunSummary, SweepRecord, TraceSample

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

TRACE_COLUMNS = ["step", "H", "beta"]
SWEEP_COLUMNS = ["c", "q", "h_min", "n_edges", "seed"]


def _format_float(value: float) -> str:
    """Shortest exact text for a float; integral values without a fraction."""
    if float(value).is_integer():
        return str(int(value))
    return repr(float(value))


def _read_rows(path: PathLike, columns: List[str]) -> List[dict]:
    with open(path, "r", newline="") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames != columns:
            raise ArtifactFormatError(
                f"{path}: expected columns {','.join(columns)}, got {reader.fieldnames}"
            )
        return list(reader)


def write_trace_csv(path: PathLike, trace: Iterable[TraceSample]) -> str:
    """
    Write an H(t) trace.

    Args:
        path: Destination file
        trace: Samples in step order

    Returns:
        Path of the written file
    """
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(TRACE_COLUMNS)
        for sample in trace:
            writer.writerow([sample.step, sample.energy, repr(sample.beta)])
    logger.info(f"Trace written to {path}")
    return str(path)


def read_trace_csv(path: PathLike) -> List[TraceSample]:
    """Read a trace written by :func:`write_trace_csv`."""
    try:
        return [
            TraceSample(step=int(row["step"]), energy=int(row["H"]), beta=float(row["beta"]))
            for row in _read_rows(path, TRACE_COLUMNS)
        ]
    except ArtifactFormatError:
        raise
    except ValueError as e:
        raise ArtifactFormatError(f"{path}: {e}") from e


def write_sweep_csv(path: PathLike, records: Iterable[SweepRecord]) -> str:
    """Write sweep rows in the order given."""
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(SWEEP_COLUMNS)
        for record in records:
            writer.writerow(
                [_format_float(record.c), record.q, record.h_min, record.n_edges, record.seed]
            )
    logger.info(f"Sweep table written to {path}")
    return str(path)


def read_sweep_csv(path: PathLike) -> List[SweepRecord]:
    """Read a sweep table written by :func:`write_sweep_csv`."""
    try:
        return [
            SweepRecord(
                c=float(row["c"]),
                q=int(row["q"]),
                h_min=int(row["h_min"]),
                n_edges=int(row["n_edges"]),
                seed=int(row["seed"]),
            )
            for row in _read_rows(path, SWEEP_COLUMNS)
        ]
    except ArtifactFormatError:
        raise
    except ValueError as e:
        raise ArtifactFormatError(f"{path}: {e}") from e


def write_summary_json(path: PathLike, summary: RunSummary) -> str:
    """Write a run summary document."""
    Path(path).write_text(summary.model_dump_json(indent=2) + "\n")
    logger.info(f"Summary written to {path}")
    return str(path)


def read_summary_json(path: PathLike) -> RunSummary:
    """Read a run summary written by :func:`write_summary_json`."""
    try:
        return RunSummary.model_validate_json(Path(path).read_text())
    except ValidationError as e:
        raise ArtifactFormatError(f"{path}: {e}") from e


def write_coloring(path: PathLike, coloring: Coloring) -> str:
    """Write a coloring as ``<vertex> <color>`` lines, vertices 1-based."""
    with open(path, "w") as f:
        f.write(f"# q={coloring.n_colors}\n")
        for v, color in enumerate(coloring.colors, start=1):
            f.write(f"{v} {color}\n")
    logger.info(f"Coloring written to {path}")
    return str(path)


def read_coloring(path: PathLike) -> Coloring:
    """Read a coloring written by :func:`write_coloring`."""
    with open(path, "r") as f:
        lines = [line.split() for line in f if line.strip()]
    if not lines or len(lines[0]) != 2 or not lines[0][1].startswith("q="):
        raise ArtifactFormatError(f"{path}: missing '# q=<colors>' header")
    try:
        n_colors = int(lines[0][1][2:])
        colors = []
        for expected, (vertex, color) in enumerate(lines[1:], start=1):
            if int(vertex) != expected:
                raise ArtifactFormatError(f"{path}: vertex {vertex} out of order")
            colors.append(int(color))
        return Coloring(colors=colors, n_colors=n_colors)
    except ArtifactFormatError:
        raise
    except ValueError as e:
        raise ArtifactFormatError(f"{path}: {e}") from e
