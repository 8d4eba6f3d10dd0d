"""Classical NAND-tree ground truth.

A complete binary NAND tree of depth ``n`` has ``N = 2**n`` leaves, each 0 or
1.  Every internal node carries the NAND of its two children, and the task is
the value at the root.  This module is the classical reference the quantum
runs are differentially tested against: exact bottom-up evaluation, layer
stepping, assignment enumeration, and a randomized short-circuit evaluator
that counts how many leaves it actually reads.

Leaf ``j`` corresponds to basis state ``|j>`` with leaf 0 the most significant
bit.  Assignments serialize either as an explicit 0/1 string of length
``2**n`` or as a hex string of ``ceil(2**n / 4)`` digits, leaf 0 as the most
significant bit in both forms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidInputError, TooLargeError

# Exhaustive enumeration is 2**(2**n) assignments; depth 3 (256) is the last
# desk-scale size.  Shared with the sweep harness.
EXHAUSTIVE_DEPTH_LIMIT = 3

_HEX_DIGITS = frozenset("0123456789abcdefABCDEF")


def nand(a: int, b: int) -> int:
    """NAND of two bits."""
    return 1 - (a & b)


@dataclass(frozen=True)
class LeafAssignment:
    """The ``2**depth`` leaf bits of a depth-``depth`` tree, leaf 0 first."""

    depth: int
    leaves: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.depth < 0:
            raise InvalidInputError(f"depth must be non-negative, got {self.depth}")
        expected = 1 << self.depth
        if len(self.leaves) != expected:
            raise InvalidInputError(
                f"depth {self.depth} needs {expected} leaves, got {len(self.leaves)}"
            )
        if any(bit not in (0, 1) for bit in self.leaves):
            raise InvalidInputError(f"leaves must be bits, got {self.leaves!r}")

    @property
    def num_leaves(self) -> int:
        return len(self.leaves)

    @classmethod
    def from_bits(cls, bits: str, depth: int | None = None) -> "LeafAssignment":
        """Parse an explicit 0/1 string, leaf 0 first."""
        if depth is None:
            n = len(bits).bit_length() - 1
            if len(bits) != 1 << n:
                raise InvalidInputError(f"bit string length {len(bits)} is not a power of two")
            depth = n
        if len(bits) != 1 << depth:
            raise InvalidInputError(
                f"bit string {bits!r} has length {len(bits)}, expected {1 << depth}"
            )
        if set(bits) - {"0", "1"}:
            raise InvalidInputError(f"bit string {bits!r} contains non-bit characters")
        return cls(depth, tuple(int(c) for c in bits))

    @classmethod
    def from_hex(cls, digits: str, depth: int) -> "LeafAssignment":
        """Parse a hex string of ``ceil(2**depth / 4)`` digits, leaf 0 the MSB."""
        num_leaves = 1 << depth
        expected = (num_leaves + 3) // 4
        if len(digits) != expected:
            raise InvalidInputError(
                f"hex string {digits!r} has {len(digits)} digits, expected {expected}"
            )
        if set(digits) - _HEX_DIGITS:
            raise InvalidInputError(f"hex string {digits!r} contains non-hex characters")
        value = int(digits, 16)
        if value >> num_leaves:
            raise InvalidInputError(
                f"hex string {digits!r} does not fit in {num_leaves} leaf bits"
            )
        return cls.from_index(depth, value)

    @classmethod
    def parse(cls, text: str, depth: int) -> "LeafAssignment":
        """Accept either serialized form (0/1 string or hex string)."""
        num_leaves = 1 << depth
        if len(text) == num_leaves and not set(text) - {"0", "1"}:
            return cls.from_bits(text, depth)
        if len(text) == (num_leaves + 3) // 4 and not set(text) - _HEX_DIGITS:
            return cls.from_hex(text, depth)
        raise InvalidInputError(
            f"assignment {text!r} is neither a {num_leaves}-bit string nor a "
            f"{(num_leaves + 3) // 4}-digit hex string for depth {depth}"
        )

    @classmethod
    def from_index(cls, depth: int, index: int) -> "LeafAssignment":
        """Leaf bits of ``index`` read as a ``2**depth``-bit binary number."""
        num_leaves = 1 << depth
        if not 0 <= index < (1 << num_leaves):
            raise InvalidInputError(f"index {index} out of range for depth {depth}")
        return cls(depth, tuple((index >> (num_leaves - 1 - j)) & 1 for j in range(num_leaves)))

    def index(self) -> int:
        """The leaf bitstring read as a binary number, leaf 0 most significant."""
        value = 0
        for bit in self.leaves:
            value = (value << 1) | bit
        return value

    def to_bits(self) -> str:
        return "".join(str(b) for b in self.leaves)

    def to_hex(self) -> str:
        return format(self.index(), f"0{(self.num_leaves + 3) // 4}x")


@dataclass(frozen=True)
class ProbeStats:
    """Outcome of a randomized evaluation: leaves read and root value found."""

    probes: int
    result: int


def nand_layer(values: Sequence[int]) -> tuple[int, ...]:
    """One bottom-up step: output[j] = NAND(input[2j], input[2j+1])."""
    if len(values) == 0 or len(values) % 2:
        raise InvalidInputError(f"layer length must be even and nonzero, got {len(values)}")
    return tuple(nand(values[2 * j], values[2 * j + 1]) for j in range(len(values) // 2))


def eval_root(assignment: LeafAssignment) -> int:
    """Exact root value by iterating pairwise NAND from the leaves up.

    Reads every leaf; a depth-0 tree is its single leaf.
    """
    values: Sequence[int] = assignment.leaves
    while len(values) > 1:
        values = nand_layer(values)
    return values[0]


def randomized_eval(assignment: LeafAssignment, seed: int) -> ProbeStats:
    """Short-circuit evaluation with seeded random child order.

    At each internal node the two children are evaluated in an order chosen
    uniformly by the seeded generator; if the first child evaluates to 0 the
    second subtree is skipped entirely (NAND(0, x) = 1).  ``probes`` counts
    the distinct leaves actually read.  Identical seeds give identical probe
    counts.  This is a baseline evaluator, not an optimal-exponent strategy.
    """
    rng = random.Random(seed)
    leaves = assignment.leaves
    probes = 0

    def evaluate(start: int, length: int) -> int:
        nonlocal probes
        if length == 1:
            probes += 1
            return leaves[start]
        half = length // 2
        first_offset = 0 if rng.getrandbits(1) == 0 else half
        first = evaluate(start + first_offset, half)
        if first == 0:
            return 1
        second = evaluate(start + (half - first_offset), half)
        return 1 - second

    result = evaluate(0, len(leaves))
    return ProbeStats(probes=probes, result=result)


def enumerate_assignments(
    depth: int, limit: int = EXHAUSTIVE_DEPTH_LIMIT
) -> Iterator[LeafAssignment]:
    """All ``2**(2**depth)`` assignments, ascending by leaf bitstring value."""
    if depth > limit:
        raise TooLargeError(
            f"exhaustive enumeration at depth {depth} would yield "
            f"2**{1 << depth} assignments (limit is depth {limit})"
        )
    for value in range(1 << (1 << depth)):
        yield LeafAssignment.from_index(depth, value)
