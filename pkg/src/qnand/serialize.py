"""Deterministic serialization for reports, sweeps, and matrix dumps.

All floats are rendered with 17 significant digits (round-trip exact for
doubles), keys keep their insertion order, and encoders add no whitespace, so
repeated identical runs produce byte-identical output.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .circuit import RunReport
from .states import DensityMatrix


def format_float(value: float) -> str:
    """17-significant-digit decimal form; '0' for zero (avoids '-0')."""
    if value == 0:
        return "0"
    return format(float(value), ".17g")


def dumps(obj: Any) -> str:
    """Compact JSON with deterministic float formatting and insertion-order keys."""
    pieces: list[str] = []
    _encode(obj, pieces)
    return "".join(pieces)


def dump_bytes(obj: Any) -> bytes:
    return (dumps(obj) + "\n").encode("ascii")


def _encode(obj: Any, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(format_float(float(obj)))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, (key, value) in enumerate(obj.items()):
            if i:
                out.append(",")
            out.append(json.dumps(str(key)))
            out.append(":")
            _encode(value, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, value in enumerate(obj):
            if i:
                out.append(",")
            _encode(value, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}: {obj!r}")


def report_to_obj(report: RunReport) -> dict:
    """The documented report schema, in its fixed key order."""
    return {
        "mode": report.mode,
        "interpretation": report.interpretation,
        "depth": report.depth,
        "assignment_hex": report.assignment_hex,
        "root_distribution": {k: report.root_distribution[k] for k in sorted(report.root_distribution)},
        "oracle_root": report.oracle_root,
        "success_probability": report.success_probability,
        "per_iteration": [
            {"q": d.q, "trace_distance": d.trace_distance, "coherence_mass": d.coherence_mass}
            for d in report.per_iteration
        ],
        "resources": report.resources.as_dict(),
        "seed": report.seed,
    }


def report_bytes(report: RunReport) -> bytes:
    return dump_bytes(report_to_obj(report))


def density_matrix_to_obj(dm: DensityMatrix) -> dict:
    """Row-major [real, imaginary] pairs plus the dimension."""
    entries = [
        [float(entry.real), float(entry.imag)]
        for row in np.asarray(dm.matrix)
        for entry in row
    ]
    return {"dimension": dm.dimension, "entries_row_major": entries}


def distribution_to_obj(distribution: dict[str, float]) -> dict:
    return {key: distribution[key] for key in sorted(distribution)}
