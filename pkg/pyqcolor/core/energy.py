"""
Conflict energy for PyQColor

H(x) counts the edges whose endpoints share a color. Single-vertex
recoloring deltas are evaluated from the adjacency in O(deg(v)).
"""

from typing import List, Tuple

import numpy as np

from pyqcolor.core.exceptions import ContractError
from pyqcolor.core.models import Coloring, Energy, Graph


def _check_compatible(graph: Graph, coloring: Coloring) -> None:
    if len(coloring) != graph.n_vertices:
        raise ContractError(
            f"coloring has {len(coloring)} entries for {graph.n_vertices} vertices"
        )


def _check_vertex_and_color(graph: Graph, coloring: Coloring, v: int, color: int) -> None:
    if not 0 <= v < graph.n_vertices:
        raise ContractError(f"vertex {v} out of range [0, {graph.n_vertices})")
    if not 0 <= color < coloring.n_colors:
        raise ContractError(f"color {color} out of range [0, {coloring.n_colors})")


def full_energy(graph: Graph, coloring: Coloring) -> Energy:
    """
    Count the monochromatic edges of a coloring.

    Args:
        graph: Graph to evaluate on
        coloring: Coloring with one entry per vertex

    Returns:
        Number of edges (v, w) with x_v == x_w, each edge counted once
    """
    _check_compatible(graph, coloring)
    u, w = graph.edge_arrays()
    if u.size == 0:
        return 0
    colors = coloring.as_array()
    return int(np.count_nonzero(colors[u] == colors[w]))


def conflicts_at(graph: Graph, coloring: Coloring, v: int, color: int) -> int:
    """Number of neighbors of ``v`` currently colored ``color``."""
    _check_compatible(graph, coloring)
    _check_vertex_and_color(graph, coloring, v, color)
    colors = coloring.colors
    return sum(1 for w in graph.adjacency[v] if colors[w] == color)


def delta_energy(graph: Graph, coloring: Coloring, v: int, new_color: int) -> int:
    """
    Energy change caused by recoloring one vertex.

    Args:
        graph: Graph to evaluate on
        coloring: Current coloring
        v: Vertex to recolor
        new_color: Proposed color, different from the current one

    Returns:
        H(x with x_v = new_color) - H(x)
    """
    _check_compatible(graph, coloring)
    _check_vertex_and_color(graph, coloring, v, new_color)
    current = coloring.colors[v]
    if new_color == current:
        raise ContractError(f"vertex {v} already has color {new_color}")
    return conflicts_at(graph, coloring, v, new_color) - conflicts_at(
        graph, coloring, v, current
    )


def conflicting_edges(graph: Graph, coloring: Coloring) -> List[Tuple[int, int]]:
    """Edges ``(u, v)``, ``u < v``, whose endpoints share a color."""
    _check_compatible(graph, coloring)
    colors = coloring.colors
    return [(u, w) for u, w in graph.edges() if colors[u] == colors[w]]

