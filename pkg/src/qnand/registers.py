"""Named-register bookkeeping for the statevector simulator.

A layout maps register names to ordered global qubit indices.  The listed
order is most-significant-first: a register's basis value is the concatenation
of its qubit bits in listed order, and the global basis index concatenates
qubits 0..m-1 with qubit 0 most significant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .errors import LayoutError

TargetSpec = Union[int, str, Sequence[Union[int, str]]]


@dataclass(frozen=True)
class RegisterLayout:
    """Disjoint named registers over ``width`` qubits."""

    registers: tuple[tuple[str, tuple[int, ...]], ...]
    width: int
    _by_name: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        by_name: dict[str, tuple[int, ...]] = {}
        seen: set[int] = set()
        for name, qubits in self.registers:
            if name in by_name:
                raise LayoutError(f"duplicate register name {name!r}")
            for q in qubits:
                if not 0 <= q < self.width:
                    raise LayoutError(f"register {name!r} index {q} outside width {self.width}")
                if q in seen:
                    raise LayoutError(f"register {name!r} overlaps qubit {q}")
                seen.add(q)
            by_name[name] = tuple(qubits)
        object.__setattr__(self, "_by_name", by_name)

    @classmethod
    def from_widths(cls, widths: Iterable[tuple[str, int]]) -> "RegisterLayout":
        """Allocate registers sequentially from qubit 0."""
        registers = []
        next_index = 0
        for name, w in widths:
            if w < 0:
                raise LayoutError(f"register {name!r} has negative width {w}")
            registers.append((name, tuple(range(next_index, next_index + w))))
            next_index += w
        return cls(tuple(registers), next_index)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.registers)

    def qubits_of(self, name: str) -> tuple[int, ...]:
        try:
            return self._by_name[name]
        except KeyError:
            raise LayoutError(f"unknown register {name!r}") from None

    def register_width(self, name: str) -> int:
        return len(self.qubits_of(name))

    def resolve(self, targets: TargetSpec) -> list[int]:
        """Expand a register name / qubit index / mixed sequence to qubit indices.

        Register names expand to their qubit lists in order; duplicates and
        out-of-range indices are rejected.
        """
        if isinstance(targets, (int, str)):
            targets = [targets]
        qubits: list[int] = []
        for item in targets:
            if isinstance(item, str):
                qubits.extend(self.qubits_of(item))
            elif isinstance(item, (int,)) and not isinstance(item, bool):
                if not 0 <= item < self.width:
                    raise LayoutError(f"qubit index {item} outside width {self.width}")
                qubits.append(item)
            else:
                raise LayoutError(f"target {item!r} is neither a register name nor a qubit index")
        if len(set(qubits)) != len(qubits):
            raise LayoutError(f"targets {targets!r} resolve to overlapping qubits {qubits}")
        return qubits
