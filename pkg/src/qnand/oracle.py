"""Diagonal phase oracle over the leaves and its Hamiltonian generator.

Leaf bits are encoded as +/-1 phases on the computational basis: entry ``j``
of the oracle is ``exp(2*pi*i * phase[j])`` with ``phase[j] = u_j / 2``, so a
1-leaf flips the sign of ``|j>`` and a 0-leaf leaves it alone.  The generator
is the diagonal (hence 1-sparse, Hermitian) matrix with entries
``2*pi*phase[j]`` radians; evolving it for time 1 reproduces the oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError
from .tree import LeafAssignment


@dataclass(frozen=True)
class DiagonalUnitary:
    """Diagonal unitary given by per-entry phases in turns (entry = e^{2*pi*i*phase})."""

    phases: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.phases) == 0:
            raise InvalidInputError("diagonal unitary needs at least one entry")

    @property
    def size(self) -> int:
        return len(self.phases)

    @property
    def num_qubits(self) -> int:
        n = (self.size - 1).bit_length()
        if self.size != 1 << n:
            raise InvalidInputError(f"size {self.size} is not a power of two")
        return n

    def entries(self) -> np.ndarray:
        """The diagonal as complex numbers."""
        return np.exp(2j * np.pi * np.asarray(self.phases, dtype=float))

    def matrix(self) -> np.ndarray:
        return np.diag(self.entries())


@dataclass(frozen=True)
class DiagonalHamiltonian:
    """Diagonal Hermitian generator; entries are phases in radians (2*pi*turn)."""

    diagonal: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.diagonal) == 0:
            raise InvalidInputError("diagonal Hamiltonian needs at least one entry")

    @property
    def size(self) -> int:
        return len(self.diagonal)


def build_diagonal_unitary(assignment: LeafAssignment) -> DiagonalUnitary:
    """Oracle whose entry j is (-1)**u_j, i.e. phase u_j / 2 turns."""
    return DiagonalUnitary(tuple(bit / 2 for bit in assignment.leaves))


def build_diagonal_hamiltonian(assignment: LeafAssignment) -> DiagonalHamiltonian:
    """Generator of the leaf oracle: diagonal entries pi * u_j radians."""
    return DiagonalHamiltonian(tuple(math.pi * bit for bit in assignment.leaves))


def exp_hamiltonian(hamiltonian: DiagonalHamiltonian, t: float) -> DiagonalUnitary:
    """Time evolution e^{i*A*t} of a diagonal generator, as a diagonal unitary.

    Entry j equals ``exp(i * diagonal[j] * t)``; for t = 1 this reproduces
    ``build_diagonal_unitary`` of the generating assignment exactly.
    """
    if not math.isfinite(t):
        raise InvalidInputError(f"evolution time must be finite, got {t!r}")
    return DiagonalUnitary(tuple((d * t / (2 * math.pi)) % 1.0 for d in hamiltonian.diagonal))
