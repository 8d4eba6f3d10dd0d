"""Divergence metrics between density matrices."""

from __future__ import annotations

import numpy as np

from .errors import InvalidInputError
from .states import DensityMatrix


def trace_distance(p: DensityMatrix, q: DensityMatrix) -> float:
    """Half the sum of singular values of ``p - q``; in [0, 1] for states.

    For the Hermitian difference of two density matrices the singular values
    are the absolute eigenvalues, which is how this computes them.
    """
    if p.dimension != q.dimension:
        raise InvalidInputError(
            f"dimension mismatch: {p.dimension} vs {q.dimension}"
        )
    eigenvalues = np.linalg.eigvalsh(p.matrix - q.matrix)
    return float(0.5 * np.abs(eigenvalues).sum())


def coherence_mass(p: DensityMatrix) -> float:
    """Sum of absolute off-diagonal entries; 0 iff computational-basis diagonal."""
    magnitudes = np.abs(p.matrix)
    return float(magnitudes.sum() - np.trace(magnitudes))
