"""
DIMACS ``.col`` reader and writer for PyQColor

Supports the edge-format subset: ``c`` comment lines, one
``p edge <N> <M>`` header and ``e <u> <v>`` lines with 1-based vertices.
"""

import logging
from pathlib import Path
from typing import List, Optional, Set, TextIO, Tuple, Union

from pyqcolor.core.exceptions import DimacsParseError
from pyqcolor.core.models import Graph

logger = logging.getLogger(__name__)

# "col" appears in older instance files in place of "edge"
HEADER_FORMATS = ("edge", "col")


def _parse_int(token: str, what: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise DimacsParseError(f"{what} '{token}' is not an integer", line_number) from None


def load_dimacs(stream: TextIO) -> Graph:
    """
    Parse a DIMACS edge-format graph.

    Duplicate edge lines and both orientations of an edge are merged. An
    edge count in the header that disagrees with the merged count is
    logged as a warning.

    Args:
        stream: Text stream positioned at the start of the file

    Returns:
        The parsed graph with 0-based vertices
    """
    n_vertices: Optional[int] = None
    declared_edges = 0
    edges: Set[Tuple[int, int]] = set()

    for line_number, raw in enumerate(stream, start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue

        kind = fields[0]
        if kind == "p":
            if n_vertices is not None:
                raise DimacsParseError("duplicate 'p' header", line_number)
            if len(fields) != 4 or fields[1] not in HEADER_FORMATS:
                raise DimacsParseError(
                    f"malformed header '{raw.strip()}', expected 'p edge <N> <M>'",
                    line_number,
                )
            n_vertices = _parse_int(fields[2], "vertex count", line_number)
            declared_edges = _parse_int(fields[3], "edge count", line_number)
            if n_vertices < 1 or declared_edges < 0:
                raise DimacsParseError(
                    f"invalid header counts N={n_vertices}, M={declared_edges}", line_number
                )
        elif kind == "e":
            if n_vertices is None:
                raise DimacsParseError("edge line before 'p' header", line_number)
            if len(fields) != 3:
                raise DimacsParseError(f"malformed edge line '{raw.strip()}'", line_number)
            u = _parse_int(fields[1], "vertex", line_number)
            v = _parse_int(fields[2], "vertex", line_number)
            for endpoint in (u, v):
                if not 1 <= endpoint <= n_vertices:
                    raise DimacsParseError(
                        f"vertex {endpoint} outside declared range 1..{n_vertices}",
                        line_number,
                    )
            if u == v:
                raise DimacsParseError(f"self-loop on vertex {u}", line_number)
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise DimacsParseError(f"unknown line type '{kind}'", line_number)

    if n_vertices is None:
        raise DimacsParseError("missing 'p edge <N> <M>' header")

    if declared_edges != len(edges):
        logger.warning(
            f"DIMACS header declares {declared_edges} edges, found {len(edges)} distinct"
        )

    graph = Graph.from_edges(n_vertices, sorted(edges))
    logger.debug(f"Loaded DIMACS graph N={graph.n_vertices}, M={graph.n_edges}")
    return graph


def save_dimacs(graph: Graph, stream: TextIO, comments: Optional[List[str]] = None) -> None:
    """
    Write a graph in DIMACS edge format.

    Args:
        graph: Graph to write
        stream: Destination text stream
        comments: Optional lines emitted as ``c`` comments before the header
    """
    for comment in comments or []:
        stream.write(f"c {comment}\n")
    stream.write(f"p edge {graph.n_vertices} {graph.n_edges}\n")
    for u, v in graph.edges():
        stream.write(f"e {u + 1} {v + 1}\n")


def read_dimacs_file(path: Union[str, Path]) -> Graph:
    """Load a DIMACS file from disk."""
    with open(path, "r", encoding="utf-8") as f:
        try:
            return load_dimacs(f)
        except UnicodeDecodeError as e:
            raise DimacsParseError(f"{path} is not UTF-8 text: {e.reason}") from e


def write_dimacs_file(
    graph: Graph, path: Union[str, Path], comments: Optional[List[str]] = None
) -> str:
    """Write a graph to a DIMACS file and return its path."""
    with open(path, "w") as f:
        save_dimacs(graph, f, comments)
    logger.info(f"Graph written to {path}")
    return str(path)
