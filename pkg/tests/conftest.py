import pytest

from pyqcolor.core.models import Graph


@pytest.fixture
def triangle():
    return Graph.complete(3)


@pytest.fixture
def k4():
    return Graph.complete(4)


@pytest.fixture
def path3():
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def cycle4():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def cycle5():
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


def _check_graph_invariants(graph: Graph) -> None:
    neighbor_sets = [set(graph.neighbors(v)) for v in range(graph.n_vertices)]
    for v, neighbors in enumerate(neighbor_sets):
        assert v not in neighbors
        assert len(neighbors) == graph.degree(v)
        for w in neighbors:
            assert 0 <= w < graph.n_vertices
            assert v in neighbor_sets[w]
    assert 2 * graph.n_edges == int(graph.degrees().sum())


@pytest.fixture
def check_graph_invariants():
    """No self-loops, symmetric, no duplicate neighbors, M = sum(deg) / 2."""
    return _check_graph_invariants
