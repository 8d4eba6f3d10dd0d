"""State containers: exact statevectors, diagonal classical mixtures, density matrices.

Two executable state representations coexist.  ``StateVector`` carries exact
pure-state amplitudes over a register layout (circuit semantics).
``ClassicalState`` carries a probability-weighted set of labeled basis states
(the declared semantics, where every asserted state is diagonal in the
computational basis).  ``DensityMatrix`` is the common comparison substrate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import InvalidInputError, LayoutError, TooLargeError
from .registers import RegisterLayout, TargetSpec

NORM_ATOL = 1e-10
PROB_ATOL = 1e-12

# Partial traces materialize a 2^w x 2^w matrix; cap the kept width.
DEFAULT_REDUCTION_LIMIT = 12


@dataclass
class StateVector:
    """Exact amplitudes over ``2**layout.width`` basis states (qubit 0 is the MSB)."""

    layout: RegisterLayout
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex)
        expected = 1 << self.layout.width
        if self.amplitudes.shape != (expected,):
            raise InvalidInputError(
                f"amplitude vector has shape {self.amplitudes.shape}, expected ({expected},)"
            )
        if abs(self.norm() - 1.0) > NORM_ATOL:
            raise InvalidInputError(f"state norm {self.norm()!r} is not 1 within {NORM_ATOL}")

    @classmethod
    def all_zeros(cls, layout: RegisterLayout) -> "StateVector":
        amplitudes = np.zeros(1 << layout.width, dtype=complex)
        amplitudes[0] = 1.0
        return cls(layout, amplitudes)

    @property
    def width(self) -> int:
        return self.layout.width

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def copy(self) -> "StateVector":
        return StateVector(self.layout, self.amplitudes.copy())


@dataclass(frozen=True)
class ClassicalState:
    """Probability-weighted labeled basis states; labels map register name -> bitstring."""

    support: tuple[tuple[float, tuple[tuple[str, str], ...]], ...]

    def __post_init__(self) -> None:
        if not self.support:
            raise InvalidInputError("classical state needs at least one support point")
        total = 0.0
        seen: set[tuple[tuple[str, str], ...]] = set()
        for prob, label in self.support:
            if prob <= 0.0:
                raise InvalidInputError(f"probability {prob!r} is not strictly positive")
            key = tuple(sorted(label))
            if key in seen:
                raise InvalidInputError(f"duplicate label {dict(label)!r}")
            seen.add(key)
            total += prob
        if abs(total - 1.0) > PROB_ATOL:
            raise InvalidInputError(f"probabilities sum to {total!r}, not 1 within {PROB_ATOL}")

    @classmethod
    def from_pairs(
        cls, pairs: Sequence[tuple[float, Mapping[str, str]]]
    ) -> "ClassicalState":
        return cls(tuple((p, tuple(label.items())) for p, label in pairs))

    def registers(self) -> set[str]:
        regs: set[str] = set()
        for _, label in self.support:
            regs.update(name for name, _ in label)
        return regs

    def canonical(self) -> tuple[tuple[tuple[tuple[str, str], ...], float], ...]:
        """Support sorted by label, for order-insensitive comparison."""
        return tuple(sorted((tuple(sorted(label)), prob) for prob, label in self.support))

    def same_distribution(self, other: "ClassicalState", atol: float = PROB_ATOL) -> bool:
        mine, theirs = self.canonical(), other.canonical()
        if len(mine) != len(theirs):
            return False
        return all(
            la == lb and abs(pa - pb) <= atol
            for (la, pa), (lb, pb) in zip(mine, theirs)
        )


@dataclass(frozen=True)
class DensityMatrix:
    """A dense density matrix; validated Hermitian, unit trace, PSD within tolerance."""

    matrix: np.ndarray

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def validate(self, atol: float = NORM_ATOL) -> "DensityMatrix":
        m = self.matrix
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InvalidInputError(f"density matrix must be square, got shape {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > atol:
            raise InvalidInputError("density matrix is not Hermitian within tolerance")
        if abs(np.trace(m).real - 1.0) > atol or abs(np.trace(m).imag) > atol:
            raise InvalidInputError(f"density matrix trace {np.trace(m)!r} is not 1")
        eigenvalues = np.linalg.eigvalsh(m)
        if eigenvalues.min() < -atol:
            raise InvalidInputError(f"density matrix has negative eigenvalue {eigenvalues.min()}")
        return self


def measure_distribution(state: StateVector, regs: TargetSpec) -> dict[str, float]:
    """Exact Born probabilities of the named registers, marginalized over the rest.

    Keys are bitstrings in the order the registers were listed; no sampling.
    """
    keep = state.layout.resolve(regs)
    if not keep:
        raise LayoutError("measurement needs at least one qubit")
    m = state.width
    probs = np.abs(state.amplitudes.reshape([2] * m)) ** 2
    drop = tuple(ax for ax in range(m) if ax not in keep)
    if drop:
        probs = probs.sum(axis=drop)
    remaining = [q for q in range(m) if q in set(keep)]
    probs = probs.transpose([remaining.index(q) for q in keep]).reshape(-1)
    k = len(keep)
    return {format(i, f"0{k}b"): float(probs[i]) for i in range(1 << k)}


def reduced_density(
    state: StateVector, regs: TargetSpec, max_width: int = DEFAULT_REDUCTION_LIMIT
) -> DensityMatrix:
    """Partial trace onto the named registers (listed order gives the qubit order)."""
    keep = state.layout.resolve(regs)
    if len(keep) > max_width:
        raise TooLargeError(
            f"reduction onto {len(keep)} qubits exceeds the limit of {max_width}"
        )
    m = state.width
    rest = [q for q in range(m) if q not in set(keep)]
    psi = state.amplitudes.reshape([2] * m).transpose(keep + rest).reshape(1 << len(keep), -1)
    rho = psi @ psi.conj().T
    return DensityMatrix(rho).validate()


def classical_to_density(state: ClassicalState, regs: Sequence[str]) -> DensityMatrix:
    """Diagonal density matrix of the listed registers, marginalized over the rest.

    Register widths come from the label bitstrings and must be consistent
    across the support; every label must cover every requested register.
    """
    widths: dict[str, int] = {}
    for prob, label in state.support:
        present = dict(label)
        for name in regs:
            if name not in present:
                raise LayoutError(f"label {present!r} does not cover register {name!r}")
            w = len(present[name])
            if widths.setdefault(name, w) != w:
                raise LayoutError(f"register {name!r} has inconsistent widths in labels")
    total_width = sum(widths[name] for name in regs)
    diag = np.zeros(1 << total_width, dtype=float)
    for prob, label in state.support:
        present = dict(label)
        bits = "".join(present[name] for name in regs)
        index = int(bits, 2) if bits else 0
        diag[index] += prob
    return DensityMatrix(np.diag(diag.astype(complex))).validate()
