"""Gate specifications, exact statevector application, and resource counting.

Gates are small frozen spec objects applied through :func:`apply_gate`, which
resolves targets (register names or qubit indices), transforms the amplitudes
by the exact unitary, and increments the resource counter.  The controlled
diagonal oracle is a single primitive counted as one oracle query; it is never
decomposed into elementary gates.  The Fourier transform is applied as the
exact DFT matrix and counted as its standard elementary decomposition
(width-1 counts as exactly one 1-qubit gate, the Hadamard it equals).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import LayoutError
from .oracle import DiagonalUnitary
from .states import StateVector

SQRT2_INV = 1 / np.sqrt(2.0)
H_MATRIX = np.array([[1, 1], [1, -1]], dtype=complex) * SQRT2_INV
X_MATRIX = np.array([[0, 1], [1, 0]], dtype=complex)


@dataclass
class ResourceCounter:
    """Monotone tallies of oracle queries and elementary gates by arity."""

    oracle_queries: int = 0
    one_qubit_gates: int = 0
    two_qubit_gates: int = 0
    three_qubit_gates: int = 0

    def add(self, other: "ResourceCounter") -> None:
        self.oracle_queries += other.oracle_queries
        self.one_qubit_gates += other.one_qubit_gates
        self.two_qubit_gates += other.two_qubit_gates
        self.three_qubit_gates += other.three_qubit_gates

    def copy(self) -> "ResourceCounter":
        return ResourceCounter(
            self.oracle_queries,
            self.one_qubit_gates,
            self.two_qubit_gates,
            self.three_qubit_gates,
        )

    def as_dict(self) -> dict[str, int]:
        return {
            "oracle_queries": self.oracle_queries,
            "one_qubit_gates": self.one_qubit_gates,
            "two_qubit_gates": self.two_qubit_gates,
            "three_qubit_gates": self.three_qubit_gates,
        }


@dataclass(frozen=True)
class Hadamard:
    """Single-qubit Hadamard."""


@dataclass(frozen=True)
class PauliX:
    """Single-qubit bit flip."""


@dataclass(frozen=True)
class ControlledDiagonal:
    """Diagonal unitary on a target register, applied when the control qubit is 1.

    Targets: ``[control, t0, t1, ...]`` with the target register listed
    most-significant-first and matching the diagonal's width.  Counts as one
    oracle query.
    """

    unitary: DiagonalUnitary


@dataclass(frozen=True)
class CCNot:
    """Toffoli: targets ``[control, control, target]``."""


@dataclass(frozen=True)
class ControlledZ:
    """Two-qubit controlled phase flip (symmetric in its targets)."""


@dataclass(frozen=True)
class DoubleControlledZ:
    """Z on the target qubit when both controls match their polarities.

    Targets: ``[control1, control2, target]``.  ``polarity[i]`` is the bit
    value (0 or 1) that activates control ``i``.
    """

    polarity: tuple[int, int] = (1, 1)

    def __post_init__(self) -> None:
        if any(p not in (0, 1) for p in self.polarity) or len(self.polarity) != 2:
            raise LayoutError(f"polarity must be two bits, got {self.polarity!r}")


@dataclass(frozen=True)
class Fourier:
    """Quantum Fourier transform (or its inverse) on the targeted register.

    Convention: F|j> = T^{-1/2} * sum_k exp(2*pi*i*j*k/T) |k>, with the
    register's listed qubit order most-significant-first on both sides.
    Width 1 equals the Hadamard exactly.
    """

    inverse: bool = False


def _apply_matrix(state: StateVector, matrix: np.ndarray, qubits: list[int]) -> None:
    """Multiply the amplitudes by ``matrix`` acting on ``qubits`` (MSB-first)."""
    m = state.width
    k = len(qubits)
    rest = [q for q in range(m) if q not in set(qubits)]
    perm = qubits + rest
    moved = state.amplitudes.reshape([2] * m).transpose(perm).reshape(1 << k, -1)
    out = (matrix @ moved).reshape([2] * m)
    state.amplitudes = out.transpose(np.argsort(perm)).reshape(-1)


def _fixed_index(width: int, fixed: dict[int, int]) -> tuple:
    index: list = [slice(None)] * width
    for qubit, value in fixed.items():
        index[qubit] = value
    return tuple(index)


def _fourier_matrix(width: int, inverse: bool) -> np.ndarray:
    size = 1 << width
    j, k = np.meshgrid(np.arange(size), np.arange(size), indexing="ij")
    sign = -1 if inverse else 1
    return np.exp(sign * 2j * np.pi * j * k / size) / np.sqrt(size)


def apply_gate(
    state: StateVector,
    gate,
    targets,
    counter: ResourceCounter,
) -> StateVector:
    """Apply a gate spec to the state in place and count it; returns the state.

    ``targets`` is a register name, qubit index, or mixed sequence; register
    names expand to their qubit lists in order.  Overlapping targets or a
    width mismatch raise :class:`LayoutError`.
    """
    qubits = state.layout.resolve(targets)
    view = state.amplitudes.reshape([2] * state.width)

    if isinstance(gate, Hadamard):
        _require_arity(gate, qubits, 1)
        _apply_matrix(state, H_MATRIX, qubits)
        counter.one_qubit_gates += 1
    elif isinstance(gate, PauliX):
        _require_arity(gate, qubits, 1)
        _apply_matrix(state, X_MATRIX, qubits)
        counter.one_qubit_gates += 1
    elif isinstance(gate, ControlledDiagonal):
        if len(qubits) < 1:
            raise LayoutError("controlled diagonal needs a control qubit")
        control, reg = qubits[0], qubits[1:]
        if gate.unitary.size != 1 << len(reg):
            raise LayoutError(
                f"diagonal of size {gate.unitary.size} does not fit a "
                f"{len(reg)}-qubit target register"
            )
        sub = view[_fixed_index(state.width, {control: 1})]
        positions = [q - (q > control) for q in reg]
        moved = np.moveaxis(sub, positions, range(len(reg)))
        phases = gate.unitary.entries().reshape([2] * len(reg) + [1] * (moved.ndim - len(reg)))
        moved *= phases
        counter.oracle_queries += 1
    elif isinstance(gate, CCNot):
        _require_arity(gate, qubits, 3)
        c1, c2, t = qubits
        on = _fixed_index(state.width, {c1: 1, c2: 1, t: 0})
        off = _fixed_index(state.width, {c1: 1, c2: 1, t: 1})
        saved = view[on].copy()
        view[on] = view[off]
        view[off] = saved
        counter.three_qubit_gates += 1
    elif isinstance(gate, ControlledZ):
        _require_arity(gate, qubits, 2)
        a, b = qubits
        view[_fixed_index(state.width, {a: 1, b: 1})] *= -1
        counter.two_qubit_gates += 1
    elif isinstance(gate, DoubleControlledZ):
        _require_arity(gate, qubits, 3)
        c1, c2, t = qubits
        p1, p2 = gate.polarity
        view[_fixed_index(state.width, {c1: p1, c2: p2, t: 1})] *= -1
        counter.three_qubit_gates += 1
    elif isinstance(gate, Fourier):
        if not qubits:
            raise LayoutError("Fourier transform needs at least one qubit")
        width = len(qubits)
        _apply_matrix(state, _fourier_matrix(width, gate.inverse), qubits)
        counter.one_qubit_gates += width
        counter.two_qubit_gates += width * (width - 1) // 2 + width // 2
    else:
        raise LayoutError(f"unknown gate spec {gate!r}")
    return state


def _require_arity(gate, qubits: list[int], arity: int) -> None:
    if len(qubits) != arity:
        raise LayoutError(f"{type(gate).__name__} takes {arity} qubit(s), got {len(qubits)}")
