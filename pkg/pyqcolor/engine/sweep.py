"""
Average-degree sweep for PyQColor

Generates one Erdős–Rényi graph per average degree, solves it for every
color count, and summarizes how H_min grows with the degree.
"""

import logging
from collections import defaultdict
from multiprocessing import Pool
from typing import Dict, Iterable, List, Tuple

import numpy as np
from tqdm import tqdm

from pyqcolor.core.models import (
    AnnealConfig,
    MultiRunConfig,
    SweepAnalysis,
    SweepConfig,
    SweepRecord,
)
from pyqcolor.core.utils import degree_key, derive_seed
from pyqcolor.engine.graph_generator import generate_erdos_renyi
from pyqcolor.engine.multirun import resolve_worker_count, run_many

logger = logging.getLogger(__name__)

# (n_vertices, c, q, graph seed, template, runs per cell)
CellTask = Tuple[int, float, int, int, AnnealConfig, int]


def graph_seed_for_degree(sweep_seed: int, avg_degree: float) -> int:
    """Seed of the graph shared by every q at one average degree."""
    return derive_seed(sweep_seed, degree_key(avg_degree))


def _solve_cell(task: CellTask) -> SweepRecord:
    """Pool entry point: regenerate the cell's graph and solve it."""
    n_vertices, avg_degree, n_colors, graph_seed, template, runs = task
    graph = generate_erdos_renyi(n_vertices, avg_degree, graph_seed)
    base = template.model_copy(
        update={"n_colors": n_colors, "seed": derive_seed(graph_seed, n_colors)}
    )
    result = run_many(graph, MultiRunConfig(base=base, n_runs=runs, n_workers=1))
    return SweepRecord(
        c=avg_degree,
        q=n_colors,
        h_min=result.best.h_min,
        n_edges=graph.n_edges,
        seed=graph_seed,
    )


class SweepRunner:
    """
    Runs a degree sweep.

    Cells are solved in parallel; rows come back ordered by (c, q)
    whatever the worker count.
    """

    def __init__(self, config: SweepConfig):
        self.config = config

    def tasks(self) -> List[CellTask]:
        """One task per (c, q) cell, sorted by (c, q)."""
        cfg = self.config
        return [
            (
                cfg.n_vertices,
                c,
                q,
                graph_seed_for_degree(cfg.seed, c),
                cfg.template,
                cfg.runs_per_cell,
            )
            for c in sorted(set(cfg.c_values))
            for q in sorted(set(cfg.q_values))
        ]

    def run(self) -> List[SweepRecord]:
        """
        Solve every cell.

        Returns:
            Sweep records sorted by (c, q)
        """
        tasks = self.tasks()
        n_workers = resolve_worker_count(self.config.n_workers, len(tasks))
        logger.info(f"Sweeping {len(tasks)} cells on {n_workers} worker(s)")

        records: List[SweepRecord] = []
        with tqdm(total=len(tasks), desc="Sweep", disable=not self.config.show_progress) as progress:
            if n_workers == 1:
                for record in map(_solve_cell, tasks):
                    records.append(record)
                    progress.update(1)
            else:
                with Pool(n_workers) as pool:
                    for record in pool.imap(_solve_cell, tasks):
                        records.append(record)
                        progress.update(1)

        for record in records:
            logger.debug(f"c={record.c:g} q={record.q}: h_min={record.h_min} of {record.n_edges}")
        return records


def run_sweep(config: SweepConfig) -> List[SweepRecord]:
    """Run a degree sweep and return its rows."""
    return SweepRunner(config).run()


def analyze_sweep(
    records: Iterable[SweepRecord], c_fit_min: float = 50.0
) -> Dict[int, SweepAnalysis]:
    """
    Summarize a sweep per color count.

    Args:
        records: Sweep rows
        c_fit_min: Smallest degree included in the linear fit

    Returns:
        Mapping q -> onset degree (first c with h_min > 0) and the
        least-squares slope of h_min against c for c >= c_fit_min
    """
    by_q: Dict[int, List[SweepRecord]] = defaultdict(list)
    for record in records:
        by_q[record.q].append(record)

    analysis: Dict[int, SweepAnalysis] = {}
    for q in sorted(by_q):
        rows = sorted(by_q[q], key=lambda r: r.c)
        onset = next((r.c for r in rows if r.h_min > 0), None)
        fit_rows = [r for r in rows if r.c >= c_fit_min]

        summary = SweepAnalysis(q=q, onset_c=onset, n_fit_points=len(fit_rows))
        if len(fit_rows) >= 2:
            cs = np.array([r.c for r in fit_rows], dtype=float)
            hs = np.array([r.h_min for r in fit_rows], dtype=float)
            slope, intercept = np.polyfit(cs, hs, 1)
            summary.slope = float(slope)
            summary.intercept = float(intercept)
        analysis[q] = summary
    return analysis
