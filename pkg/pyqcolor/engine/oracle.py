"""
Exhaustive coloring oracle for PyQColor

Enumerates all q^N colorings of small graphs. Used to validate the
annealer; refuses instances beyond a fixed budget.
"""

import logging
from typing import Iterator

import numpy as np

from pyqcolor.core.enums import (
    ORACLE_MAX_ASSIGNMENTS,
    ORACLE_MAX_VERTICES_COUNT,
    ORACLE_MAX_VERTICES_HMIN,
)
from pyqcolor.core.exceptions import OracleBudgetError, ParameterError
from pyqcolor.core.models import Energy, Graph

logger = logging.getLogger(__name__)

CHUNK_SIZE = 1 << 14


def _check_budget(graph: Graph, n_colors: int, max_vertices: int) -> None:
    if n_colors < 1:
        raise ParameterError(f"n_colors must be >= 1, got {n_colors}")
    if graph.n_vertices > max_vertices:
        raise OracleBudgetError(
            f"exhaustive search refused: {graph.n_vertices} vertices > {max_vertices}"
        )
    if n_colors**graph.n_vertices > ORACLE_MAX_ASSIGNMENTS:
        raise OracleBudgetError(
            f"exhaustive search refused: {n_colors}^{graph.n_vertices} colorings "
            f"exceed {ORACLE_MAX_ASSIGNMENTS}"
        )


def _conflict_counts(graph: Graph, n_colors: int) -> Iterator[np.ndarray]:
    """Yield H for every coloring, in chunks, in lexicographic order."""
    n_vertices = graph.n_vertices
    total = n_colors**n_vertices
    u, w = graph.edge_arrays()
    powers = n_colors ** np.arange(n_vertices - 1, -1, -1, dtype=np.int64)

    for start in range(0, total, CHUNK_SIZE):
        codes = np.arange(start, min(start + CHUNK_SIZE, total), dtype=np.int64)
        # Row i holds the base-q digits of code i, one per vertex.
        colorings = (codes[:, None] // powers[None, :]) % n_colors
        if u.size == 0:
            yield np.zeros(codes.size, dtype=np.int64)
        else:
            yield np.count_nonzero(colorings[:, u] == colorings[:, w], axis=1)


def count_proper_colorings(
    graph: Graph, n_colors: int, max_vertices: int = ORACLE_MAX_VERTICES_COUNT
) -> int:
    """
    Count the proper colorings of a small graph.

    Args:
        graph: Graph with at most ``max_vertices`` vertices
        n_colors: Number of colors q
        max_vertices: Refusal threshold

    Returns:
        Number of colorings with zero conflict energy
    """
    _check_budget(graph, n_colors, max_vertices)
    count = sum(int(np.count_nonzero(chunk == 0)) for chunk in _conflict_counts(graph, n_colors))
    logger.debug(f"{count} proper {n_colors}-colorings of a {graph.n_vertices}-vertex graph")
    return count


def brute_force_hmin(
    graph: Graph, n_colors: int, max_vertices: int = ORACLE_MAX_VERTICES_HMIN
) -> Energy:
    """
    Global minimum of the conflict energy by exhaustive search.

    Args:
        graph: Graph with at most ``max_vertices`` vertices
        n_colors: Number of colors q
        max_vertices: Refusal threshold

    Returns:
        min over all q^N colorings of H(x)
    """
    _check_budget(graph, n_colors, max_vertices)
    best = graph.n_edges
    for chunk in _conflict_counts(graph, n_colors):
        best = min(best, int(chunk.min()))
        if best == 0:
            break
    return best
