#!/usr/bin/env python3
"""
PyQColor - Main Entry Point

Graph coloring by Metropolis simulated annealing on Erdős–Rényi and
DIMACS graphs.
"""

import sys
from pathlib import Path

# Add the project root to Python path
sys.path.insert(0, str(Path(__file__).parent))

from pyqcolor.cli import main


if __name__ == "__main__":
    sys.exit(main())
