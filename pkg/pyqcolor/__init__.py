"""
PyQColor - graph coloring by Metropolis simulated annealing

Minimizes the number of monochromatic edges of a q-coloring with a
geometric inverse-temperature schedule, with tooling to reproduce
Erdős–Rényi experiments from the command line.
"""

__version__ = "0.1.0"
__author__ = "PyQColor Development Team"
__description__ = "Graph coloring by Metropolis simulated annealing"

# Minimal package-level exports to avoid heavy import side effects
from pyqcolor.core.models import AnnealConfig, Coloring, Graph, RunResult, Schedule

__all__ = [
    "__version__",
    "AnnealConfig",
    "Coloring",
    "Graph",
    "RunResult",
    "Schedule",
]
