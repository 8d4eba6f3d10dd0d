"""Declared-state semantics: the algorithm as a sequence of asserted mixtures.

This mode constructs, iteration by iteration, exactly the classical mixtures
the procedure asserts: the initial maximally mixed index register; after the
odd-branch estimation, the estimate bit correlated with the surviving index;
the even-branch input; the three-register classically correlated state; the
same with the output qubit initialized to 1; the post-NAND state; and the
post-Fourier mixture used to justify the next iteration's rebuilt oracle.
With one estimate bit and phases confined to {0, 1/2}, phase estimation is
exact, so the estimates equal the true bits and each iteration performs one
bottom-up NAND layer; the returned root always matches the classical tree.

Register names used in the labels: ``A`` initial index register, ``X``/``Y``
odd/even estimate bits, ``Z`` output bit, ``B`` surviving index register,
``S`` the odd/even selector qubit.

Abstract step accounting (the documented cost model, all per run): synthesis
of the leaf oracle from its 1-sparse generator costs ``depth`` steps; each
1-bit phase estimation costs 1 (two per iteration); the Toffoli costs 3; each
between-iteration Fourier rebuild costs 1 (the width-1 transforms across the
surviving index run in parallel).  Total: ``7 * depth - 1``, affine in depth.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import InvalidInputError
from .gates import ResourceCounter
from .states import ClassicalState
from .tree import LeafAssignment, nand, nand_layer

FOURIER_TABLE_SIZE = 2  # T = 2**tau with tau = 1: a single estimate bit


def predicted_step_count(depth: int) -> int:
    """Closed form of the abstract step count: 7 * depth - 1."""
    return 7 * depth - 1


@dataclass(frozen=True)
class IterationTrace:
    """The asserted states and value tables of one iteration.

    ``odd_bits``/``even_bits`` are the exact phase estimates (scaled to bits)
    at odd/even indices of the current value table; ``nand_bits`` is their
    pairwise NAND, the next value table.
    """

    q: int
    odd_bits: tuple[int, ...]
    even_bits: tuple[int, ...]
    nand_bits: tuple[int, ...]
    odd_estimated: ClassicalState  # (X, B): estimate bit correlated with the index
    even_input: ClassicalState  # (B, S): index register during the even estimation
    correlated: ClassicalState  # (X, Y, B): both estimates, classically correlated
    output_added: ClassicalState  # (X, Y, Z, B): output qubit initialized to 1
    post_nand: ClassicalState  # (X, Y, Z, B): Z now NAND(X, Y)
    post_fourier: ClassicalState | None  # (Z, B): after the rebuild transform; None when last


@dataclass(frozen=True)
class DeclaredTrace:
    """Everything the declared run asserts, plus its resource accounting."""

    depth: int
    initial_mixture: ClassicalState
    iterations: tuple[IterationTrace, ...]
    root: int
    abstract_steps: int
    resources: ResourceCounter


def _bits(value: int, width: int) -> str:
    return format(value, f"0{width}b") if width else ""


def _uniform_index_mixture(register: str, width: int) -> ClassicalState:
    weight = 1.0 / (1 << width)
    return ClassicalState.from_pairs(
        [(weight, {register: _bits(j, width)}) for j in range(1 << width)]
    )


def _post_fourier_mixture(nand_bits: tuple[int, ...], index_width: int) -> ClassicalState:
    """Mixture over (Z, B) after the width-1 Fourier rebuild.

    Each weight is computed literally as the transform phase times its own
    conjugate over the normalization, so the phases cancel by construction
    and the result carries no dependence on the NAND values.
    """
    pairs = []
    for j, z in enumerate(nand_bits):
        for k in range(FOURIER_TABLE_SIZE):
            phase = cmath.exp(2j * math.pi * z * k / FOURIER_TABLE_SIZE)
            weight = (phase * phase.conjugate()).real / (FOURIER_TABLE_SIZE * len(nand_bits))
            pairs.append((weight, {"Z": _bits(k, 1), "B": _bits(j, index_width)}))
    return ClassicalState.from_pairs(pairs)


def declared_run(assignment: LeafAssignment) -> tuple[int, DeclaredTrace]:
    """Run the declared semantics; returns the root bit and the full trace.

    Raises on depth 0: the iteration needs at least one layer to consume.
    """
    depth = assignment.depth
    if depth < 1:
        raise InvalidInputError("declared run needs depth >= 1 (no layer to evaluate)")

    counter = ResourceCounter()
    steps = depth  # synthesis of the leaf oracle from its 1-sparse generator
    initial = _uniform_index_mixture("A", depth)

    values: tuple[int, ...] = assignment.leaves
    iterations: list[IterationTrace] = []
    for q in range(1, depth + 1):
        index_width = depth - q
        size = 1 << index_width
        odd = tuple(values[2 * j] for j in range(size))
        even = tuple(values[2 * j + 1] for j in range(size))
        nands = tuple(nand(x, y) for x, y in zip(odd, even))
        weight = 1.0 / size

        odd_estimated = ClassicalState.from_pairs(
            [(weight, {"X": _bits(odd[j], 1), "B": _bits(j, index_width)}) for j in range(size)]
        )
        even_input = ClassicalState.from_pairs(
            [(weight, {"B": _bits(j, index_width), "S": "1"}) for j in range(size)]
        )
        correlated = ClassicalState.from_pairs(
            [
                (weight, {"X": _bits(odd[j], 1), "Y": _bits(even[j], 1), "B": _bits(j, index_width)})
                for j in range(size)
            ]
        )
        output_added = ClassicalState.from_pairs(
            [
                (
                    weight,
                    {
                        "X": _bits(odd[j], 1),
                        "Y": _bits(even[j], 1),
                        "Z": "1",
                        "B": _bits(j, index_width),
                    },
                )
                for j in range(size)
            ]
        )
        post_nand = ClassicalState.from_pairs(
            [
                (
                    weight,
                    {
                        "X": _bits(odd[j], 1),
                        "Y": _bits(even[j], 1),
                        "Z": _bits(nands[j], 1),
                        "B": _bits(j, index_width),
                    },
                )
                for j in range(size)
            ]
        )

        counter.oracle_queries += 2  # one estimation per branch parity
        counter.one_qubit_gates += 4  # Hadamard pair around each estimation
        counter.one_qubit_gates += 1  # X initializing Z to 1
        counter.three_qubit_gates += 1  # the Toffoli writing NAND(X, Y) into Z
        steps += 2 + 3

        post_fourier = None
        if q < depth:
            post_fourier = _post_fourier_mixture(nands, index_width)
            counter.one_qubit_gates += 1  # width-1 Fourier rebuild
            steps += 1

        iterations.append(
            IterationTrace(
                q=q,
                odd_bits=odd,
                even_bits=even,
                nand_bits=nands,
                odd_estimated=odd_estimated,
                even_input=even_input,
                correlated=correlated,
                output_added=output_added,
                post_nand=post_nand,
                post_fourier=post_fourier,
            )
        )
        assert nands == nand_layer(values)
        values = nands

    root = values[0]
    trace = DeclaredTrace(
        depth=depth,
        initial_mixture=initial,
        iterations=tuple(iterations),
        root=root,
        abstract_steps=steps,
        resources=counter,
    )
    return root, trace
