"""
Utility functions for PyQColor

Seed derivation and small numeric helpers shared by the engine.
"""

from typing import List

MASK_64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(value: int) -> int:
    """
    SplitMix64 finalizer.

    A bijection on 64-bit integers, so distinct inputs give distinct outputs.
    """
    z = value & MASK_64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK_64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK_64
    return z ^ (z >> 31)


def derive_seed(base_seed: int, index: int) -> int:
    """
    Derive the seed of run ``index`` from a base seed.

    Computes ``splitmix64(base_seed + (index + 1) * 0x9E3779B97F4A7C15)``
    modulo 2^64. For a fixed base seed and indices below 2^64 the results
    are pairwise distinct.

    Args:
        base_seed: Seed of the experiment
        index: Run index (0-based)

    Returns:
        A non-negative 64-bit seed
    """
    return splitmix64(base_seed + (index + 1) * GOLDEN_GAMMA)


def derive_seeds(base_seed: int, count: int) -> List[int]:
    """Seeds for runs ``0..count-1``."""
    return [derive_seed(base_seed, i) for i in range(count)]


def degree_key(avg_degree: float) -> int:
    """Integer key of an average degree, used to seed one graph per degree."""
    return int(round(avg_degree * 1000))
