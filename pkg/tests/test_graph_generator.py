import numpy as np
import pytest

from pyqcolor.core.exceptions import ParameterError
from pyqcolor.engine.graph_generator import edge_probability, generate_erdos_renyi


class TestEdgeProbability:
    """Tests for the degree to probability mapping."""

    def test_probability(self):
        assert edge_probability(1001, 10) == pytest.approx(0.01)
        assert edge_probability(2, 1.0) == 1.0
        assert edge_probability(1, 0.0) == 0.0

    def test_invalid_arguments(self):
        with pytest.raises(ParameterError):
            edge_probability(0, 1.0)
        with pytest.raises(ParameterError):
            edge_probability(10, -0.5)
        with pytest.raises(ParameterError):
            edge_probability(10, 9.5)


class TestErdosRenyiGenerator:
    """Tests for the Erdős–Rényi generator."""

    def test_deterministic_generation(self):
        graph1 = generate_erdos_renyi(200, 5.0, seed=42)
        graph2 = generate_erdos_renyi(200, 5.0, seed=42)
        assert graph1.model_dump() == graph2.model_dump()

    def test_different_seeds_give_different_graphs(self):
        graph1 = generate_erdos_renyi(200, 5.0, seed=1)
        graph2 = generate_erdos_renyi(200, 5.0, seed=2)
        assert graph1.edges() != graph2.edges()

    def test_probability_one_on_two_vertices(self):
        graph = generate_erdos_renyi(2, 1.0, seed=0)
        assert graph.n_edges == 1
        assert graph.edges() == [(0, 1)]

    def test_complete_graph_when_degree_is_maximal(self):
        graph = generate_erdos_renyi(6, 5.0, seed=3)
        assert graph.n_edges == 15

    def test_zero_degree_gives_no_edges(self):
        graph = generate_erdos_renyi(500, 0.0, seed=9)
        assert graph.n_edges == 0
        assert graph.n_vertices == 500

    def test_single_vertex(self):
        graph = generate_erdos_renyi(1, 0.0, seed=0)
        assert graph.n_vertices == 1
        assert graph.n_edges == 0

    def test_invalid_degree(self):
        with pytest.raises(ParameterError):
            generate_erdos_renyi(10, 12.0, seed=0)
        with pytest.raises(ParameterError):
            generate_erdos_renyi(10, -1.0, seed=0)

    def test_graph_invariants_over_random_inputs(self, check_graph_invariants):
        rng = np.random.default_rng(31)
        for seed in range(200):
            n_vertices = int(rng.integers(1, 80))
            avg_degree = float(rng.uniform(0, n_vertices - 1)) if n_vertices > 1 else 0.0
            graph = generate_erdos_renyi(n_vertices, avg_degree, seed)
            assert graph.n_vertices == n_vertices
            check_graph_invariants(graph)

    @pytest.mark.parametrize("avg_degree", [5.0, 10.0])
    def test_mean_degree_matches_target(self, avg_degree):
        means = np.array(
            [generate_erdos_renyi(1000, avg_degree, seed).average_degree() for seed in range(50)]
        )
        standard_error = means.std(ddof=1) / np.sqrt(means.size)
        assert abs(means.mean() - avg_degree) <= 3 * standard_error
