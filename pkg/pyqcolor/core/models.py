"""
Core data models for PyQColor

Defines graphs, colorings, sampler configuration and run results using
Pydantic for validation and serialization.
"""

from typing import Any, Dict, Iterable, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from pyqcolor.core.enums import (
    SCHEDULE_BASE,
    SCHEDULE_OFFSET,
    TRACE_POINTS_TARGET,
    Preset,
)
from pyqcolor.core.exceptions import ParameterError, VertexIndexError

# Energy is the number of monochromatic edges; always an exact integer.
Energy = int


class Graph(BaseModel):
    """
    Immutable undirected simple graph in adjacency-list form.

    Vertices are ``0..n_vertices-1``. Each undirected edge appears in the
    adjacency of both endpoints and is counted once in ``n_edges``.
    """

    model_config = ConfigDict(frozen=True)

    n_vertices: int = Field(ge=1)
    adjacency: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_invariants(self) -> "Graph":
        if len(self.adjacency) != self.n_vertices:
            raise ValueError(
                f"adjacency has {len(self.adjacency)} rows for {self.n_vertices} vertices"
            )

        neighbor_sets = [set(nbrs) for nbrs in self.adjacency]
        for v, nbrs in enumerate(self.adjacency):
            if len(neighbor_sets[v]) != len(nbrs):
                raise ValueError(f"duplicate neighbor entries for vertex {v}")
            for w in nbrs:
                if not 0 <= w < self.n_vertices:
                    raise ValueError(f"neighbor {w} of vertex {v} is out of range")
                if w == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if v not in neighbor_sets[w]:
                    raise ValueError(f"edge ({v}, {w}) is not symmetric")
        return self

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """
        Build a graph from an edge list, dropping duplicates.

        Args:
            n_vertices: Number of vertices
            edges: Pairs of 0-based vertex indices in either orientation

        Returns:
            The constructed graph with sorted neighbor lists
        """
        if n_vertices < 1:
            raise ParameterError(f"n_vertices must be >= 1, got {n_vertices}")

        neighbor_sets: List[set] = [set() for _ in range(n_vertices)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise ParameterError(f"edge ({u}, {v}) out of range for {n_vertices} vertices")
            if u == v:
                raise ParameterError(f"self-loop at vertex {u} is not allowed")
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)

        adjacency = tuple(tuple(sorted(nbrs)) for nbrs in neighbor_sets)
        return cls(n_vertices=n_vertices, adjacency=adjacency)

    @classmethod
    def complete(cls, n_vertices: int) -> "Graph":
        """Complete graph K_n."""
        return cls.from_edges(
            n_vertices,
            ((u, v) for u in range(n_vertices) for v in range(u + 1, n_vertices)),
        )

    @classmethod
    def empty(cls, n_vertices: int) -> "Graph":
        """Graph with no edges."""
        return cls.from_edges(n_vertices, [])

    @property
    def n_edges(self) -> int:
        """Number of undirected edges."""
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def neighbors(self, v: int) -> List[int]:
        """
        Get the neighbors of a vertex.

        Args:
            v: Vertex index

        Returns:
            Neighbor indices in ascending order
        """
        if not 0 <= v < self.n_vertices:
            raise VertexIndexError(f"vertex {v} out of range [0, {self.n_vertices})")
        return list(self.adjacency[v])

    def degree(self, v: int) -> int:
        """Degree of a single vertex."""
        return len(self.neighbors(v))

    def degrees(self) -> np.ndarray:
        """Degree of every vertex."""
        return np.fromiter(
            (len(nbrs) for nbrs in self.adjacency), dtype=np.int64, count=self.n_vertices
        )

    def average_degree(self) -> float:
        """Mean vertex degree, 2M/N."""
        return 2.0 * self.n_edges / self.n_vertices

    def edges(self) -> List[Tuple[int, int]]:
        """All edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        return [(u, w) for u, nbrs in enumerate(self.adjacency) for w in nbrs if u < w]

    def edge_arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        """Edge endpoints as two parallel integer arrays."""
        edges = self.edges()
        if not edges:
            empty = np.zeros(0, dtype=np.int64)
            return empty, empty.copy()
        pairs = np.asarray(edges, dtype=np.int64)
        return pairs[:, 0], pairs[:, 1]

    def to_csr(self) -> Tuple[np.ndarray, np.ndarray]:
        """
        Compressed sparse row form of the adjacency.

        Returns:
            Tuple of (indptr, indices); neighbors of v are
            ``indices[indptr[v]:indptr[v + 1]]``
        """
        indptr = np.zeros(self.n_vertices + 1, dtype=np.int64)
        np.cumsum(self.degrees(), out=indptr[1:])
        indices = np.fromiter(
            (w for nbrs in self.adjacency for w in nbrs),
            dtype=np.int64,
            count=int(indptr[-1]),
        )
        return indptr, indices


class Coloring(BaseModel):
    """Assignment of one of ``n_colors`` colors to every vertex."""

    colors: List[int]
    n_colors: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_range(self) -> "Coloring":
        for v, color in enumerate(self.colors):
            if not 0 <= color < self.n_colors:
                raise ValueError(
                    f"color {color} of vertex {v} outside [0, {self.n_colors})"
                )
        return self

    def __len__(self) -> int:
        return len(self.colors)

    def relabeled(self, permutation: List[int]) -> "Coloring":
        """Apply a permutation of the color labels."""
        return Coloring(
            colors=[permutation[c] for c in self.colors], n_colors=self.n_colors
        )

    def as_array(self) -> np.ndarray:
        return np.asarray(self.colors, dtype=np.int64)


class Schedule(BaseModel):
    """
    Geometric beta schedule.

    Beta is multiplied by ``(0.2 + N/n) / 0.2`` every
    ``floor(trials_factor * N)`` iterations.
    """

    model_config = ConfigDict(frozen=True)

    beta0: float = Field(default=0.8, gt=0.0)
    trials_factor: float = Field(default=1.5, gt=0.0)

    def growth_factor(self, n_vertices: int, n_iterations: int) -> float:
        """Multiplicative beta update applied at each schedule firing."""
        return (SCHEDULE_OFFSET + n_vertices / n_iterations) / SCHEDULE_BASE

    def period(self, n_vertices: int) -> int:
        """Iterations between two beta updates."""
        return max(1, int(self.trials_factor * n_vertices))


class PresetParameters(BaseModel):
    """Iteration count and schedule pinned by a named preset."""

    n_iterations: int
    beta0: float
    trials_factor: float


PRESETS: Dict[Preset, PresetParameters] = {
    Preset.PAPER_1E6: PresetParameters(n_iterations=1_000_000, beta0=0.8, trials_factor=1.5),
    Preset.PAPER_1E9: PresetParameters(
        n_iterations=1_000_000_000, beta0=0.98, trials_factor=3.4
    ),
}


class AnnealConfig(BaseModel):
    """All knobs of a single annealing run."""

    model_config = ConfigDict(frozen=True)

    n_colors: int = Field(ge=2)
    n_iterations: int = Field(default=1_000_000, ge=1)
    schedule: Schedule = Field(default_factory=Schedule)
    seed: int = Field(default=0, ge=0)
    trace_stride: Optional[int] = Field(default=None, ge=1)

    @classmethod
    def from_preset(cls, preset: Preset, n_colors: int, **overrides: Any) -> "AnnealConfig":
        """
        Build a config from a named preset.

        Args:
            preset: Preset to start from
            n_colors: Number of colors q
            **overrides: Field values that replace the preset's

        Returns:
            The resulting configuration
        """
        params = PRESETS[preset]
        schedule = overrides.pop(
            "schedule",
            Schedule(beta0=params.beta0, trials_factor=params.trials_factor),
        )
        values: Dict[str, Any] = {
            "n_colors": n_colors,
            "n_iterations": params.n_iterations,
            "schedule": schedule,
        }
        values.update(overrides)
        return cls(**values)

    @property
    def effective_trace_stride(self) -> int:
        """Trace stride, defaulting to roughly 1000 samples per run."""
        if self.trace_stride is not None:
            return self.trace_stride
        return max(1, self.n_iterations // TRACE_POINTS_TARGET)


class TraceSample(BaseModel):
    """One point of the H(t) / beta(t) trace."""

    step: int
    energy: Energy
    beta: float


class RunResult(BaseModel):
    """Outcome of one annealing run."""

    h_min: Energy
    best_coloring: Coloring
    final_beta: float
    final_coloring: Optional[Coloring] = None
    trace: List[TraceSample] = Field(default_factory=list)
    n_accepted: int = 0
    final_energy: Energy = 0
    seed: int = 0
    n_iterations: int = 0


class MultiRunConfig(BaseModel):
    """Best-of-k independent runs over one graph."""

    model_config = ConfigDict(frozen=True)

    base: AnnealConfig
    n_runs: int = Field(default=1, ge=1)
    n_workers: Optional[int] = Field(default=None, ge=1)
    split_budget: bool = False
    show_progress: bool = False


class MultiRunResult(BaseModel):
    """Best run and the per-run minima of a multi-run."""

    best: RunResult
    all_hmins: List[Energy]
    best_index: int
    seeds: List[int]


class SweepConfig(BaseModel):
    """
    Degree sweep: one graph per average degree, every q solved on it.

    ``template.n_colors`` and ``template.seed`` are replaced per cell.
    """

    model_config = ConfigDict(frozen=True)

    n_vertices: int = Field(ge=1)
    c_values: List[float]
    q_values: List[int]
    template: AnnealConfig
    runs_per_cell: int = Field(default=1, ge=1)
    seed: int = Field(default=0, ge=0)
    n_workers: Optional[int] = Field(default=None, ge=1)
    show_progress: bool = False

    @field_validator("q_values")
    @classmethod
    def _check_q_values(cls, q_values: List[int]) -> List[int]:
        if not q_values:
            raise ValueError("q_values must not be empty")
        for q in q_values:
            if q < 2:
                raise ValueError(f"q values must be >= 2, got {q}")
        return q_values

    @model_validator(mode="after")
    def _check_c_values(self) -> "SweepConfig":
        if not self.c_values:
            raise ValueError("c_values must not be empty")
        for c in self.c_values:
            if not 0.0 <= c <= self.n_vertices - 1:
                raise ValueError(
                    f"average degree {c} outside [0, {self.n_vertices - 1}]"
                )
        return self


class SweepRecord(BaseModel):
    """One (c, q) -> H_min row of a degree sweep."""

    c: float
    q: int
    h_min: Energy
    n_edges: int
    seed: int

    @model_validator(mode="after")
    def _check_bound(self) -> "SweepRecord":
        if not 0 <= self.h_min <= self.n_edges:
            raise ValueError(f"h_min {self.h_min} outside [0, {self.n_edges}]")
        return self


class SweepAnalysis(BaseModel):
    """Per-q summary of a sweep: onset degree and large-c slope."""

    q: int
    onset_c: Optional[float] = None
    slope: Optional[float] = None
    intercept: Optional[float] = None
    n_fit_points: int = 0


class RunSummary(BaseModel):
    """Summary document written next to a solve trace."""

    h_min: Energy
    final_beta: float
    n_accepted: int
    all_hmins: List[Energy]
    elapsed_seconds: float
    config: Dict[str, Any] = Field(default_factory=dict)
