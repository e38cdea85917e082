"""
Random graph generation for PyQColor

Generates Erdős–Rényi G(N, p) graphs at a prescribed average degree.
"""

import logging

import numpy as np

from pyqcolor.core.exceptions import ParameterError
from pyqcolor.core.models import Graph

logger = logging.getLogger(__name__)


def edge_probability(n_vertices: int, avg_degree: float) -> float:
    """
    Edge probability giving an expected vertex degree of ``avg_degree``.

    Args:
        n_vertices: Number of vertices N
        avg_degree: Target average degree c

    Returns:
        p = c / (N - 1), or 0 for a single vertex
    """
    if n_vertices < 1:
        raise ParameterError(f"n_vertices must be >= 1, got {n_vertices}")
    if avg_degree < 0:
        raise ParameterError(f"average degree must be >= 0, got {avg_degree}")
    if avg_degree > n_vertices - 1:
        raise ParameterError(
            f"average degree {avg_degree} exceeds N - 1 = {n_vertices - 1}"
        )
    if n_vertices == 1:
        return 0.0
    return avg_degree / (n_vertices - 1)


def generate_erdos_renyi(n_vertices: int, avg_degree: float, seed: int) -> Graph:
    """
    Sample an Erdős–Rényi graph.

    Each of the C(N, 2) unordered pairs becomes an edge independently with
    probability c / (N - 1). The result depends only on the arguments.

    Args:
        n_vertices: Number of vertices N
        avg_degree: Expected vertex degree c
        seed: Seed of the PCG64 generator

    Returns:
        The sampled graph
    """
    p = edge_probability(n_vertices, avg_degree)
    rng = np.random.default_rng(seed)

    rows, cols = np.triu_indices(n_vertices, k=1)
    mask = rng.random(rows.size) < p
    graph = Graph.from_edges(n_vertices, zip(rows[mask].tolist(), cols[mask].tolist()))

    logger.debug(
        f"Generated G({n_vertices}, {p:.6g}) with {graph.n_edges} edges (seed {seed})"
    )
    return graph
