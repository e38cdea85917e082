"""
Unit tests for the conflict energy

Checks H(x) against a direct edge count and the single-vertex delta
against full recomputation.
"""

import itertools

import numpy as np
import pytest

from pyqcolor.core.energy import (
    conflicting_edges,
    conflicts_at,
    delta_energy,
    full_energy,
)
from pyqcolor.core.exceptions import ContractError
from pyqcolor.core.models import Coloring, Graph
from pyqcolor.engine.graph_generator import generate_erdos_renyi


def naive_energy(graph: Graph, colors) -> int:
    return sum(1 for u, v in graph.edges() if colors[u] == colors[v])


class TestFullEnergy:
    """Tests for the full conflict count."""

    def test_monochromatic_triangle(self, triangle):
        assert full_energy(triangle, Coloring(colors=[0, 0, 0], n_colors=3)) == 3

    def test_proper_triangle(self, triangle):
        coloring = Coloring(colors=[0, 1, 2], n_colors=3)
        assert full_energy(triangle, coloring) == 0
        assert conflicting_edges(triangle, coloring) == []

    def test_edgeless_graph(self):
        graph = Graph.empty(6)
        assert full_energy(graph, Coloring(colors=[0] * 6, n_colors=2)) == 0

    def test_matches_direct_count(self):
        rng = np.random.default_rng(3)
        for seed in range(20):
            graph = generate_erdos_renyi(40, 4.0, seed)
            colors = rng.integers(0, 3, size=40).tolist()
            coloring = Coloring(colors=colors, n_colors=3)
            assert full_energy(graph, coloring) == naive_energy(graph, colors)

    def test_bounds(self):
        rng = np.random.default_rng(8)
        graph = generate_erdos_renyi(60, 10.0, 4)
        for _ in range(50):
            coloring = Coloring(colors=rng.integers(0, 4, size=60).tolist(), n_colors=4)
            assert 0 <= full_energy(graph, coloring) <= graph.n_edges

    def test_invariant_under_color_permutation(self):
        rng = np.random.default_rng(5)
        graph = generate_erdos_renyi(50, 6.0, 2)
        coloring = Coloring(colors=rng.integers(0, 4, size=50).tolist(), n_colors=4)
        energy = full_energy(graph, coloring)
        for permutation in itertools.permutations(range(4)):
            assert full_energy(graph, coloring.relabeled(list(permutation))) == energy

    def test_length_mismatch(self, triangle):
        with pytest.raises(ContractError):
            full_energy(triangle, Coloring(colors=[0, 1], n_colors=2))

    def test_conflicting_edges(self, cycle4):
        coloring = Coloring(colors=[0, 0, 1, 1], n_colors=2)
        assert conflicting_edges(cycle4, coloring) == [(0, 1), (2, 3)]
        assert len(conflicting_edges(cycle4, coloring)) == full_energy(cycle4, coloring)


class TestDeltaEnergy:
    """Tests for single-vertex energy changes."""

    def test_triangle_recolor(self, triangle):
        coloring = Coloring(colors=[0, 0, 0], n_colors=3)
        assert delta_energy(triangle, coloring, 0, 1) == -2

    def test_isolated_vertex(self):
        graph = Graph.from_edges(3, [(0, 1)])
        coloring = Coloring(colors=[0, 0, 0], n_colors=2)
        assert delta_energy(graph, coloring, 2, 1) == 0

    def test_conflicts_at(self, path3):
        coloring = Coloring(colors=[1, 0, 1], n_colors=2)
        assert conflicts_at(path3, coloring, 1, 1) == 2
        assert conflicts_at(path3, coloring, 1, 0) == 0
        assert conflicts_at(path3, coloring, 0, 0) == 1

    def test_same_color_rejected(self, triangle):
        coloring = Coloring(colors=[0, 1, 2], n_colors=3)
        with pytest.raises(ContractError):
            delta_energy(triangle, coloring, 1, 1)

    def test_out_of_range_arguments_rejected(self, triangle):
        coloring = Coloring(colors=[0, 1, 2], n_colors=3)
        with pytest.raises(ContractError):
            delta_energy(triangle, coloring, 3, 0)
        with pytest.raises(ContractError):
            delta_energy(triangle, coloring, 0, 3)

    def test_delta_matches_recomputation(self):
        """Random walk over 100k proposals on random graphs up to 10 vertices."""
        rng = np.random.default_rng(2024)
        n_cases = 0
        while n_cases < 100_000:
            n_vertices = int(rng.integers(2, 11))
            avg_degree = float(rng.uniform(0, n_vertices - 1))
            n_colors = int(rng.integers(2, 6))
            graph = generate_erdos_renyi(n_vertices, avg_degree, int(rng.integers(1 << 31)))
            coloring = Coloring(
                colors=rng.integers(0, n_colors, size=n_vertices).tolist(), n_colors=n_colors
            )
            energy = full_energy(graph, coloring)

            for _ in range(500):
                v = int(rng.integers(n_vertices))
                new_color = (coloring.colors[v] + int(rng.integers(1, n_colors))) % n_colors
                delta = delta_energy(graph, coloring, v, new_color)
                assert abs(delta) <= graph.degree(v)

                coloring.colors[v] = new_color
                new_energy = full_energy(graph, coloring)
                assert new_energy - energy == delta
                energy = new_energy
            n_cases += 500
