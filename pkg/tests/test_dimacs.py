import io
import logging

import numpy as np
import pytest

from pyqcolor.core.exceptions import DimacsParseError
from pyqcolor.core.models import Graph
from pyqcolor.data.dimacs import (
    load_dimacs,
    read_dimacs_file,
    save_dimacs,
    write_dimacs_file,
)
from pyqcolor.engine.graph_generator import generate_erdos_renyi

TRIANGLE = """c a triangle
p edge 3 3
e 1 2
e 2 3
e 1 3
"""


def _load(text: str) -> Graph:
    return load_dimacs(io.StringIO(text))


def _parse_error(text: str) -> DimacsParseError:
    with pytest.raises(DimacsParseError) as info:
        _load(text)
    return info.value


class TestLoadDimacs:
    """Tests for parsing DIMACS edge files."""

    def test_triangle(self):
        graph = _load(TRIANGLE)
        assert graph.n_vertices == 3
        assert graph.n_edges == 3
        assert graph.neighbors(0) == [1, 2]

    def test_comments_and_blank_lines_skipped(self):
        graph = _load("\nc one\n\np edge 2 1\nc two\ne 1 2\n\n")
        assert graph.edges() == [(0, 1)]

    def test_col_header_accepted(self):
        assert _load("p col 2 1\ne 2 1\n").n_edges == 1

    def test_duplicate_edges_merged(self):
        graph = _load("p edge 2 2\ne 1 2\ne 2 1\n")
        assert graph.n_edges == 1

    def test_edge_count_mismatch_warns(self, caplog):
        with caplog.at_level(logging.WARNING, logger="pyqcolor.data.dimacs"):
            graph = _load("p edge 3 5\ne 1 2\n")
        assert graph.n_edges == 1
        assert "declares 5 edges" in caplog.text

    def test_isolated_vertices_kept(self):
        graph = _load("p edge 10 1\ne 1 2\n")
        assert graph.n_vertices == 10
        assert graph.neighbors(9) == []

    def test_missing_header(self):
        error = _parse_error("c nothing here\n")
        assert error.line_number is None

    def test_edge_before_header(self):
        assert _parse_error("e 1 2\np edge 2 1\n").line_number == 1

    def test_duplicate_header(self):
        assert _parse_error("p edge 2 1\np edge 2 1\n").line_number == 2

    def test_malformed_header(self):
        assert _parse_error("p graph 2 1\n").line_number == 1
        assert _parse_error("p edge two 1\n").line_number == 1

    def test_vertex_out_of_range(self):
        error = _parse_error("p edge 3 1\nc\ne 1 4\n")
        assert error.line_number == 3
        assert "line 3" in str(error)

    def test_self_loop(self):
        assert _parse_error("p edge 3 1\ne 2 2\n").line_number == 2

    def test_malformed_edge(self):
        assert _parse_error("p edge 3 1\ne 1\n").line_number == 2
        assert _parse_error("p edge 3 1\ne 1 x\n").line_number == 2

    def test_unknown_line_type(self):
        assert _parse_error("p edge 3 1\nn 1 2\n").line_number == 2

    def test_parse_error_is_value_error(self):
        with pytest.raises(ValueError):
            _load("p edge 0 0\n")

    def test_random_streams_give_valid_graphs(self, check_graph_invariants):
        rng = np.random.default_rng(17)
        for _ in range(200):
            n_vertices = int(rng.integers(2, 40))
            n_lines = int(rng.integers(0, 3 * n_vertices))
            lines = ["c random instance"]
            expected = set()
            for _ in range(n_lines):
                u, v = (int(x) + 1 for x in rng.choice(n_vertices, size=2, replace=False))
                expected.add((min(u, v) - 1, max(u, v) - 1))
                lines.append(f"e {u} {v}")
                if rng.random() < 0.3:
                    lines.append(f"e {v} {u}")
                if rng.random() < 0.2:
                    lines.append("")
            declared = n_lines + int(rng.integers(-2, 3))
            lines.insert(1, f"p edge {n_vertices} {max(0, declared)}")

            graph = _load("\n".join(lines) + "\n")
            assert graph.n_vertices == n_vertices
            assert set(graph.edges()) == expected
            assert graph.n_edges == len(expected)
            check_graph_invariants(graph)


class TestSaveDimacs:
    """Tests for writing DIMACS edge files."""

    def test_output_format(self, triangle):
        stream = io.StringIO()
        save_dimacs(triangle, stream, comments=["K3"])
        assert stream.getvalue().splitlines() == [
            "c K3",
            "p edge 3 3",
            "e 1 2",
            "e 1 3",
            "e 2 3",
        ]

    def test_round_trip(self):
        graph = generate_erdos_renyi(120, 6.0, seed=5)
        stream = io.StringIO()
        save_dimacs(graph, stream)
        stream.seek(0)
        assert load_dimacs(stream) == graph

    def test_file_round_trip(self, tmp_path, cycle5):
        path = tmp_path / "c5.col"
        assert write_dimacs_file(cycle5, path) == str(path)
        assert read_dimacs_file(path) == cycle5

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            read_dimacs_file(tmp_path / "absent.col")

    def test_undecodable_file(self, tmp_path):
        path = tmp_path / "binary.col"
        path.write_bytes(b"c \xff\xfe\np edge 2 1\ne 1 2\n")
        with pytest.raises(DimacsParseError):
            read_dimacs_file(path)
