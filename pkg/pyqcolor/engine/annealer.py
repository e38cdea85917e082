"""
Metropolis simulated annealing for PyQColor

Runs the single-vertex Metropolis chain on the conflict energy while beta
grows geometrically, tracking the best state visited and an H(t) trace.
"""

import logging
import math
from typing import List, Optional, Tuple

import numpy as np

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - optional dependency
    NUMBA_AVAILABLE = False
    logging.warning("Numba not available - using the pure Python Metropolis kernel")

from pyqcolor.core.energy import delta_energy, full_energy
from pyqcolor.core.exceptions import ContractError, ParameterError
from pyqcolor.core.models import (
    AnnealConfig,
    Coloring,
    Graph,
    RunResult,
    Schedule,
    TraceSample,
)

logger = logging.getLogger(__name__)

# Upper bound on random draws generated per kernel call
BLOCK_SIZE = 1 << 15


def _metropolis_block(
    indptr,
    indices,
    colors,
    best_colors,
    vertices,
    offsets,
    uniforms,
    n_colors,
    beta,
    energy,
    best_energy,
):
    """
    Apply one block of Metropolis proposals at a fixed beta.

    Works on numpy arrays (compiled) or plain lists (interpreted). ``colors``
    and ``best_colors`` are updated in place.

    Returns:
        Tuple of (energy, best_energy, accepted moves in this block)
    """
    n_accepted = 0
    for i in range(len(vertices)):
        v = vertices[i]
        current = colors[v]
        proposed = (current + offsets[i]) % n_colors

        delta = 0
        for k in range(indptr[v], indptr[v + 1]):
            neighbor_color = colors[indices[k]]
            if neighbor_color == proposed:
                delta += 1
            elif neighbor_color == current:
                delta -= 1

        if delta <= 0 or uniforms[i] < math.exp(-beta * delta):
            colors[v] = proposed
            energy += delta
            n_accepted += 1
            if energy < best_energy:
                best_energy = energy
                best_colors[:] = colors
    return energy, best_energy, n_accepted


if NUMBA_AVAILABLE:
    _compiled_block = njit(nogil=True)(_metropolis_block)
else:  # pragma: no cover - optional dependency
    _compiled_block = None


def init_coloring(n_vertices: int, n_colors: int, rng: np.random.Generator) -> Coloring:
    """
    Draw a uniformly random coloring.

    Args:
        n_vertices: Number of vertices
        n_colors: Number of colors q, at least 2
        rng: Generator supplying the draws

    Returns:
        Coloring with independent uniform entries in [0, q)
    """
    if n_colors < 2:
        raise ParameterError(f"at least 2 colors are required, got {n_colors}")
    if n_vertices < 1:
        raise ParameterError(f"n_vertices must be >= 1, got {n_vertices}")
    colors = rng.integers(0, n_colors, size=n_vertices).tolist()
    return Coloring(colors=colors, n_colors=n_colors)


def acceptance_probability(delta: int, beta: float) -> float:
    """Metropolis acceptance probability min(1, exp(-beta * delta))."""
    if delta <= 0:
        return 1.0
    return math.exp(-beta * delta)


def metropolis_step(
    graph: Graph, coloring: Coloring, beta: float, rng: np.random.Generator
) -> Tuple[Coloring, int, bool]:
    """
    Perform one Metropolis transition in place.

    A vertex is drawn uniformly, then a color uniformly among the q - 1
    colors different from its current one. Moves with delta <= 0 are always
    accepted; others with probability exp(-beta * delta).

    Args:
        graph: Graph being colored
        coloring: Current coloring, modified when the move is accepted
        beta: Inverse temperature
        rng: Generator supplying the draws

    Returns:
        Tuple of (coloring, applied energy change, accepted)
    """
    if beta <= 0:
        raise ParameterError(f"beta must be positive, got {beta}")
    if coloring.n_colors < 2:
        raise ParameterError("at least 2 colors are required to propose a move")
    if len(coloring) != graph.n_vertices:
        raise ContractError(
            f"coloring has {len(coloring)} entries for {graph.n_vertices} vertices"
        )

    v = int(rng.integers(graph.n_vertices))
    proposed = (coloring.colors[v] + int(rng.integers(1, coloring.n_colors))) % coloring.n_colors
    delta = delta_energy(graph, coloring, v, proposed)

    if delta <= 0 or rng.random() < math.exp(-beta * delta):
        coloring.colors[v] = proposed
        return coloring, delta, True
    return coloring, 0, False


def schedule_period(schedule: Schedule, n_vertices: int) -> int:
    """Iterations between beta updates, floor(trials_factor * N)."""
    return schedule.period(n_vertices)


def update_beta(
    schedule: Schedule, beta: float, n_vertices: int, n_iterations: int
) -> float:
    """
    Apply one schedule firing.

    Args:
        schedule: Annealing schedule
        beta: Current inverse temperature
        n_vertices: Number of vertices N
        n_iterations: Total iterations n of the run

    Returns:
        beta * (0.2 + N/n) / 0.2
    """
    if beta <= 0:
        raise ParameterError(f"beta must be positive, got {beta}")
    if n_iterations < 1:
        raise ParameterError(f"n_iterations must be >= 1, got {n_iterations}")
    return beta * schedule.growth_factor(n_vertices, n_iterations)


def final_beta(schedule: Schedule, n_vertices: int, n_iterations: int) -> float:
    """Beta after a full run: beta0 * factor ** floor(n / period)."""
    firings = n_iterations // schedule_period(schedule, n_vertices)
    return schedule.beta0 * schedule.growth_factor(n_vertices, n_iterations) ** firings


def _next_multiple(step: int, period: int) -> int:
    return (step // period + 1) * period


class MetropolisAnnealer:
    """
    Simulated annealing driver for one graph and one configuration.

    The chain state (coloring, energy, generator) is private to a run, so
    several annealers may share one graph across processes. Uses a
    Numba-compiled kernel when available, falling back to the same code
    interpreted.
    """

    def __init__(self, graph: Graph, config: AnnealConfig, use_numba: Optional[bool] = None):
        """
        Initialize the annealer.

        Args:
            graph: Graph to color
            config: Sampler configuration
            use_numba: Force the compiled kernel on or off. If None, uses it
                when Numba is installed.
        """
        self.graph = graph
        self.config = config
        if use_numba is None:
            self.use_numba = NUMBA_AVAILABLE
        else:
            self.use_numba = bool(use_numba) and NUMBA_AVAILABLE

        self._indptr, self._indices = graph.to_csr()

    def run(self) -> RunResult:
        """
        Execute ``n_iterations`` Metropolis proposals.

        Beta is updated after every ``period``-th step; the current energy
        is maintained by accumulating deltas. Trace samples are taken at
        step 0, every ``trace_stride`` steps and at the final step.

        Returns:
            Run result with the trajectory minimum and its earliest coloring
        """
        cfg = self.config
        graph = self.graph
        n_vertices = graph.n_vertices
        n_colors = cfg.n_colors
        n_iterations = cfg.n_iterations
        schedule = cfg.schedule
        period = schedule_period(schedule, n_vertices)
        stride = cfg.effective_trace_stride

        rng = np.random.default_rng(cfg.seed)
        initial = init_coloring(n_vertices, n_colors, rng)
        energy = full_energy(graph, initial)
        beta = schedule.beta0

        if self.use_numba:
            kernel = _compiled_block
            colors = initial.as_array()
            indptr, indices = self._indptr, self._indices
        else:
            kernel = _metropolis_block
            colors = list(initial.colors)
            indptr, indices = self._indptr.tolist(), self._indices.tolist()

        best_colors = colors.copy()
        best_energy = energy
        n_accepted = 0
        trace: List[TraceSample] = [TraceSample(step=0, energy=energy, beta=beta)]

        logger.debug(
            f"Annealing N={n_vertices}, M={graph.n_edges}, q={n_colors}, "
            f"n={n_iterations}, period={period}, seed={cfg.seed}"
        )

        step = 0
        while step < n_iterations:
            end = min(
                n_iterations,
                step + BLOCK_SIZE,
                _next_multiple(step, period),
                _next_multiple(step, stride),
            )
            length = end - step
            vertices = rng.integers(0, n_vertices, size=length)
            offsets = rng.integers(1, n_colors, size=length)
            uniforms = rng.random(length)
            if not self.use_numba:
                vertices, offsets, uniforms = (
                    vertices.tolist(),
                    offsets.tolist(),
                    uniforms.tolist(),
                )

            energy, best_energy, accepted = kernel(
                indptr,
                indices,
                colors,
                best_colors,
                vertices,
                offsets,
                uniforms,
                n_colors,
                beta,
                energy,
                best_energy,
            )
            energy, best_energy = int(energy), int(best_energy)
            n_accepted += int(accepted)
            step = end

            if step % period == 0:
                beta = update_beta(schedule, beta, n_vertices, n_iterations)
            if step % stride == 0 or step == n_iterations:
                trace.append(TraceSample(step=step, energy=energy, beta=beta))

        final_coloring = Coloring(colors=np.asarray(colors).tolist(), n_colors=n_colors)
        recomputed = full_energy(graph, final_coloring)
        if recomputed != energy:
            raise RuntimeError(
                f"accumulated energy {energy} differs from recomputed {recomputed}"
            )

        logger.info(
            f"Run finished: h_min={best_energy}, final H={energy}, "
            f"final beta={beta:.4g}, accepted {n_accepted}/{n_iterations}"
        )
        return RunResult(
            h_min=best_energy,
            best_coloring=Coloring(colors=np.asarray(best_colors).tolist(), n_colors=n_colors),
            final_beta=beta,
            final_coloring=final_coloring,
            trace=trace,
            n_accepted=n_accepted,
            final_energy=energy,
            seed=cfg.seed,
            n_iterations=n_iterations,
        )


def run_annealing(graph: Graph, config: AnnealConfig) -> RunResult:
    """Run one annealing chain with the given configuration."""
    return MetropolisAnnealer(graph, config).run()
