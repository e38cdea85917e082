"""
Engine module for PyQColor

Contains graph generation, the Metropolis annealer, best-of-k execution,
the degree sweep and the exhaustive oracle.
"""

from pyqcolor.engine.graph_generator import generate_erdos_renyi, edge_probability
from pyqcolor.engine.annealer import (
    MetropolisAnnealer,
    init_coloring,
    metropolis_step,
    acceptance_probability,
    update_beta,
    schedule_period,
    final_beta,
    run_annealing,
)
from pyqcolor.engine.multirun import MultiRunner, derive_seed, run_many
from pyqcolor.engine.sweep import SweepRunner, run_sweep, analyze_sweep
from pyqcolor.engine.oracle import count_proper_colorings, brute_force_hmin

__all__ = [
    "generate_erdos_renyi",
    "edge_probability",
    "MetropolisAnnealer",
    "init_coloring",
    "metropolis_step",
    "acceptance_probability",
    "update_beta",
    "schedule_period",
    "final_beta",
    "run_annealing",
    "MultiRunner",
    "run_many",
    "derive_seed",
    "SweepRunner",
    "run_sweep",
    "analyze_sweep",
    "count_proper_colorings",
    "brute_force_hmin",
]
