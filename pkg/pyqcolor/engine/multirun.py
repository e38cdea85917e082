"""
Best-of-k independent annealing runs for PyQColor

Runs k seeded chains on one shared graph, sequentially or on a process
pool, and keeps the run with the lowest trajectory minimum.
"""

import logging
import os
from multiprocessing import Pool
from typing import List, Optional, Tuple

from tqdm import tqdm

from pyqcolor.core.exceptions import ParameterError
from pyqcolor.core.models import (
    AnnealConfig,
    Graph,
    MultiRunConfig,
    MultiRunResult,
    RunResult,
)
from pyqcolor.core.utils import derive_seed, derive_seeds
from pyqcolor.engine.annealer import MetropolisAnnealer

logger = logging.getLogger(__name__)


def _run_single(task: Tuple[Graph, AnnealConfig]) -> RunResult:
    """Pool entry point; module level so it pickles."""
    graph, config = task
    return MetropolisAnnealer(graph, config).run()


def resolve_worker_count(requested: Optional[int], n_tasks: int) -> int:
    """Worker count: the request, or the CPU count, capped at ``n_tasks``."""
    if requested is None:
        requested = os.cpu_count() or 1
    return max(1, min(requested, n_tasks))


class MultiRunner:
    """
    Executes a multi-run configuration.

    Per-run seeds come from ``derive_seed(base.seed, index)``. The result
    does not depend on the worker count.
    """

    def __init__(self, graph: Graph, config: MultiRunConfig):
        """
        Initialize the runner.

        Args:
            graph: Graph shared by all runs
            config: Multi-run configuration
        """
        if config.n_runs < 1:
            raise ParameterError(f"n_runs must be >= 1, got {config.n_runs}")
        self.graph = graph
        self.config = config
        self.seeds = derive_seeds(config.base.seed, config.n_runs)

    def run_configs(self) -> List[AnnealConfig]:
        """The per-run annealing configurations, in run-index order."""
        base = self.config.base
        n_iterations = base.n_iterations
        if self.config.split_budget:
            n_iterations = max(1, base.n_iterations // self.config.n_runs)
        return [
            base.model_copy(update={"seed": seed, "n_iterations": n_iterations})
            for seed in self.seeds
        ]

    def run(self) -> MultiRunResult:
        """
        Run all chains and aggregate.

        Returns:
            The best run (lowest h_min, ties to the lowest index) and every
            run's h_min in run-index order
        """
        configs = self.run_configs()
        tasks = [(self.graph, cfg) for cfg in configs]
        n_workers = resolve_worker_count(self.config.n_workers, len(tasks))

        logger.info(
            f"Starting {len(tasks)} runs on {n_workers} worker(s) "
            f"(N={self.graph.n_vertices}, q={self.config.base.n_colors})"
        )

        results: List[RunResult] = []
        progress = tqdm(
            total=len(tasks),
            desc="Runs",
            disable=not self.config.show_progress,
        )
        with progress:
            if n_workers == 1:
                for result in map(_run_single, tasks):
                    results.append(result)
                    self._report(progress, results)
            else:
                with Pool(n_workers) as pool:
                    for result in pool.imap(_run_single, tasks):
                        results.append(result)
                        self._report(progress, results)

        all_hmins = [result.h_min for result in results]
        best_index = min(range(len(results)), key=lambda i: (all_hmins[i], i))
        logger.info(f"Best of {len(results)} runs: h_min={all_hmins[best_index]} (run {best_index})")

        return MultiRunResult(
            best=results[best_index],
            all_hmins=all_hmins,
            best_index=best_index,
            seeds=self.seeds,
        )

    @staticmethod
    def _report(progress: tqdm, results: List[RunResult]) -> None:
        progress.update(1)
        progress.set_postfix(best=min(r.h_min for r in results))


def run_many(graph: Graph, config: MultiRunConfig) -> MultiRunResult:
    """Run ``config.n_runs`` independent chains and return the best."""
    return MultiRunner(graph, config).run()
