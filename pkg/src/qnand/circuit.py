"""Circuit semantics: a literal unitary realization of the procedure.

Each iteration performs two 1-bit phase estimations (odd branch with the
selector at 0, even branch with the selector at 1), writes NAND of the two
estimate bits into a fresh output qubit via a Toffoli, and, between
iterations, replaces the oracle by its gate-level rebuild: a
doubly-controlled Z onto the previous output qubit, with the new estimation
ancilla and the odd/even selector (at the stated polarity) as controls.

The composition of iterations is underdetermined by the prose being tested,
so two named interpretations are executable:

* ``FRESH_B``: every iteration prepares a brand-new uniform-superposition
  index register and a fresh selector qubit (prepared 0, X-flipped to 1
  between the odd and even estimations).
* ``REUSE_INDEX``: iteration q >= 2 reuses the surviving index register from
  iteration q-1; its last qubit becomes the odd/even selector and is used
  purely as a polarity control (it is never flipped).

Iteration 1 is identical under both: the real leaf oracle is applied as a
controlled diagonal on the full index register.  After each iteration's
estimations the reduced state of (X, Y, index) is captured and compared to
the declared semantics' correlated state; the divergence (trace distance and
coherence mass) is data, not an error.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .declared import DeclaredTrace, declared_run
from .errors import InvalidConfigError, TooLargeError
from .gates import (
    CCNot,
    ControlledDiagonal,
    DoubleControlledZ,
    Hadamard,
    PauliX,
    ResourceCounter,
    apply_gate,
)
from .metrics import coherence_mass, trace_distance
from .oracle import build_diagonal_unitary
from .registers import RegisterLayout
from .states import (
    DensityMatrix,
    StateVector,
    classical_to_density,
    measure_distribution,
    reduced_density,
)
from .tree import LeafAssignment, eval_root

DEFAULT_MAX_WIDTH = 22  # FreshB at depth 4


class Interpretation(enum.Enum):
    """How iteration q >= 2 obtains its index register and rebuilt oracle."""

    FRESH_B = "fresh-b"
    REUSE_INDEX = "reuse-index"

    @classmethod
    def parse(cls, text: str) -> "Interpretation":
        for member in cls:
            if member.value == text:
                return member
        raise InvalidConfigError(
            f"unknown interpretation {text!r}; expected one of "
            f"{[m.value for m in cls]}"
        )


@dataclass(frozen=True)
class PhaseEstimationConfig:
    """Estimation sizes; both fixed to 1 because all phases are 0 or 1/2.

    ``estimate_bits`` is the width of each estimate register;
    ``transform_bits`` the width of the rebuild Fourier transform.
    """

    estimate_bits: int = 1
    transform_bits: int = 1

    @property
    def table_size(self) -> int:
        return 1 << self.transform_bits

    def validate(self) -> "PhaseEstimationConfig":
        if self.estimate_bits != 1 or self.transform_bits != 1:
            raise InvalidConfigError(
                "only 1-bit estimation is supported: phases are exactly 0 or 1/2, "
                f"got estimate_bits={self.estimate_bits}, transform_bits={self.transform_bits}"
            )
        return self


@dataclass(frozen=True)
class IterationDivergence:
    """Gap between the circuit's reduced (X, Y, index) state and the declared one."""

    q: int
    trace_distance: float
    coherence_mass: float


@dataclass
class RunReport:
    """Everything one run reports; serializes to the documented JSON schema."""

    mode: str
    interpretation: str | None
    depth: int
    assignment_hex: str
    root_distribution: dict[str, float]
    oracle_root: int
    success_probability: float
    per_iteration: list[IterationDivergence]
    resources: ResourceCounter
    seed: int | None = None

    @property
    def oracle_agreement(self) -> bool:
        """True when the run puts more than half its mass on the oracle's root."""
        return self.success_probability > 0.5


@dataclass(frozen=True)
class GateStep:
    gate: object
    targets: tuple


@dataclass(frozen=True)
class SnapshotStep:
    """Capture the reduced state on ``registers`` as iteration ``q``'s record."""

    q: int
    registers: tuple[str, ...]


@dataclass(frozen=True)
class CircuitPlan:
    layout: RegisterLayout
    steps: tuple
    measure_register: str


def required_width(depth: int, interpretation: Interpretation) -> int:
    """Total qubits the plan allocates."""
    if interpretation is Interpretation.FRESH_B:
        # per iteration: fresh index (depth - q), selector, X, Y, Z
        return depth * (depth - 1) // 2 + 4 * depth
    return 4 * depth  # shared index register of `depth` qubits + X, Y, Z per iteration


def build_plan(assignment: LeafAssignment, interpretation: Interpretation) -> CircuitPlan:
    """Lay out registers and emit the full gate/snapshot sequence for one run."""
    depth = assignment.depth
    if depth < 1:
        raise InvalidConfigError("circuit run needs depth >= 1")
    oracle = build_diagonal_unitary(assignment)

    widths: list[tuple[str, int]] = []
    if interpretation is Interpretation.REUSE_INDEX:
        # One shared index register, allocated MSB-first as singleton registers
        # aux-n .. aux-1; iteration q uses aux-q as its selector and the
        # prefix aux-n .. aux-(q+1) as its surviving index register.
        widths.extend((f"aux-{depth - i}", 1) for i in range(depth))
        for q in range(1, depth + 1):
            widths.extend(((f"X{q}", 1), (f"Y{q}", 1), (f"Z{q}", 1)))
    else:
        for q in range(1, depth + 1):
            widths.extend(
                (
                    (f"B{q}", depth - q),
                    (f"aux-{q}", 1),
                    (f"X{q}", 1),
                    (f"Y{q}", 1),
                    (f"Z{q}", 1),
                )
            )
    layout = RegisterLayout.from_widths(widths)

    def index_registers(q: int) -> tuple[str, ...]:
        """The surviving index register of iteration q, MSB-first."""
        if interpretation is Interpretation.REUSE_INDEX:
            return tuple(f"aux-{i}" for i in range(depth, q, -1))
        return (f"B{q}",)

    steps: list = []
    for q in range(1, depth + 1):
        ancilla_x, ancilla_y, output = f"X{q}", f"Y{q}", f"Z{q}"
        selector = f"aux-{q}"
        fresh_selector = interpretation is Interpretation.FRESH_B or q == 1

        if interpretation is Interpretation.FRESH_B:
            for qubit in layout.qubits_of(f"B{q}"):
                steps.append(GateStep(Hadamard(), (qubit,)))
        elif q == 1:
            for name in index_registers(1):
                steps.append(GateStep(Hadamard(), (name,)))

        if q == 1:
            full_index = index_registers(1) + (selector,)
            odd_oracle = GateStep(ControlledDiagonal(oracle), (ancilla_x,) + full_index)
            even_oracle = GateStep(ControlledDiagonal(oracle), (ancilla_y,) + full_index)
        else:
            previous_output = f"Z{q - 1}"
            odd_oracle = GateStep(
                DoubleControlledZ(polarity=(1, 0)), (ancilla_x, selector, previous_output)
            )
            even_oracle = GateStep(
                DoubleControlledZ(polarity=(1, 1)), (ancilla_y, selector, previous_output)
            )

        # Odd-branch estimation: selector at 0 (fresh) or polarity-0 control.
        steps.append(GateStep(Hadamard(), (ancilla_x,)))
        steps.append(odd_oracle)
        steps.append(GateStep(Hadamard(), (ancilla_x,)))
        # Even-branch estimation: selector at 1.
        if fresh_selector:
            steps.append(GateStep(PauliX(), (selector,)))
        steps.append(GateStep(Hadamard(), (ancilla_y,)))
        steps.append(even_oracle)
        steps.append(GateStep(Hadamard(), (ancilla_y,)))

        steps.append(SnapshotStep(q=q, registers=(ancilla_x, ancilla_y) + index_registers(q)))

        steps.append(GateStep(PauliX(), (output,)))
        steps.append(GateStep(CCNot(), (ancilla_x, ancilla_y, output)))

    return CircuitPlan(layout=layout, steps=tuple(steps), measure_register=f"Z{depth}")


def count_plan_resources(plan: CircuitPlan) -> ResourceCounter:
    """Resource counts of a plan without executing it."""
    counter = ResourceCounter()
    for step in plan.steps:
        if not isinstance(step, GateStep):
            continue
        if isinstance(step.gate, ControlledDiagonal):
            counter.oracle_queries += 1
        elif isinstance(step.gate, (Hadamard, PauliX)):
            counter.one_qubit_gates += 1
        elif isinstance(step.gate, (CCNot, DoubleControlledZ)):
            counter.three_qubit_gates += 1
        else:  # pragma: no cover - plans only emit the gates above
            raise InvalidConfigError(f"unexpected gate in plan: {step.gate!r}")
    return counter


def compare_traces(
    declared: DeclaredTrace, snapshots: list[tuple[int, DensityMatrix]]
) -> list[IterationDivergence]:
    """Divergence of each circuit snapshot from the declared correlated state."""
    by_q = {it.q: it for it in declared.iterations}
    records = []
    for q, snapshot in snapshots:
        reference = classical_to_density(by_q[q].correlated, ["X", "Y", "B"])
        records.append(
            IterationDivergence(
                q=q,
                trace_distance=trace_distance(snapshot, reference),
                coherence_mass=coherence_mass(snapshot),
            )
        )
    return records


def circuit_run(
    assignment: LeafAssignment,
    interpretation: Interpretation,
    *,
    max_width: int = DEFAULT_MAX_WIDTH,
    config: PhaseEstimationConfig | None = None,
    mode_label: str = "circuit",
    seed: int | None = None,
) -> RunReport:
    """Execute the unitary realization and report against the declared trace."""
    if not isinstance(interpretation, Interpretation):
        interpretation = Interpretation.parse(str(interpretation))
    (config or PhaseEstimationConfig()).validate()
    width = required_width(assignment.depth, interpretation)
    if width > max_width:
        raise TooLargeError(
            f"depth {assignment.depth} under {interpretation.value} needs {width} qubits, "
            f"budget is {max_width}"
        )

    plan = build_plan(assignment, interpretation)
    _, declared_trace = declared_run(assignment)

    counter = ResourceCounter()
    state = StateVector.all_zeros(plan.layout)
    snapshots: list[tuple[int, DensityMatrix]] = []
    for step in plan.steps:
        if isinstance(step, GateStep):
            apply_gate(state, step.gate, step.targets, counter)
        else:
            snapshots.append((step.q, reduced_density(state, list(step.registers))))

    distribution = measure_distribution(state, plan.measure_register)
    oracle_root = eval_root(assignment)
    return RunReport(
        mode=mode_label,
        interpretation=interpretation.value,
        depth=assignment.depth,
        assignment_hex=assignment.to_hex(),
        root_distribution=distribution,
        oracle_root=oracle_root,
        success_probability=distribution[str(oracle_root)],
        per_iteration=compare_traces(declared_trace, snapshots),
        resources=counter,
        seed=seed,
    )


def declared_report(
    assignment: LeafAssignment, *, seed: int | None = None, mode_label: str = "declared"
) -> RunReport:
    """Wrap a declared run in the common report shape (divergence-free)."""
    root, trace = declared_run(assignment)
    return RunReport(
        mode=mode_label,
        interpretation=None,
        depth=assignment.depth,
        assignment_hex=assignment.to_hex(),
        root_distribution={"0": 1.0 if root == 0 else 0.0, "1": 1.0 if root == 1 else 0.0},
        oracle_root=eval_root(assignment),
        success_probability=1.0,
        per_iteration=[],
        resources=trace.resources,
        seed=seed,
    )
