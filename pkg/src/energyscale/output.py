"""Byte-stable JSON and CSV rendering of command results.

Floats are written with 15 significant digits, in positional notation when
``1e-9 <= |x| < 1e9`` and in scientific notation otherwise. ``results`` maps
names either to scalars or to tables (lists of flat dicts with equal keys).
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

SIGNIFICANT_DIGITS = 15


def format_float(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x!r}")
    if x == 0.0:
        return "0"
    if 1e-9 <= abs(x) < 1e9:
        return np.format_float_positional(
            x, precision=SIGNIFICANT_DIGITS, unique=False, fractional=False, trim="-"
        )
    mantissa, exponent = f"{x:.{SIGNIFICANT_DIGITS - 1}e}".split("e")
    return f"{mantissa.rstrip('0').rstrip('.')}e{exponent}"


def format_scalar(value) -> str:
    """Text form of one value as it appears in either output format."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def _json(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float)):
        return format_scalar(value)
    if isinstance(value, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_json(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_json(v) for v in value) + "]"
    return json.dumps(format_scalar(value))


def _is_table(value) -> bool:
    return isinstance(value, list) and all(isinstance(row, dict) for row in value)


@dataclass
class OutputEnvelope:
    command: str
    inputs: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)

    def to_json(self, quiet: bool = False) -> str:
        if quiet:
            return _json(self.results) + "\n"
        body = {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "warnings": list(self.warnings),
        }
        return _json(body) + "\n"

    def to_csv(self, quiet: bool = False) -> str:
        """Scalars as one single-row table, then each table; blocks split by a blank line."""
        buf = io.StringIO()
        if not quiet:
            buf.write(f"# command: {self.command}\n")
            for key, value in self.inputs.items():
                buf.write(f"# input: {key}={format_scalar(value)}\n")
            for warning in self.warnings:
                buf.write(f"# warning: {warning}\n")
        blocks = []
        scalars = {k: v for k, v in self.results.items() if not _is_table(v)}
        if scalars:
            blocks.append([scalars])
        blocks.extend(v for v in self.results.values() if _is_table(v) and v)
        for i, rows in enumerate(blocks):
            if i:
                buf.write("\n")
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(list(rows[0]))
            for row in rows:
                writer.writerow([format_scalar(v) for v in row.values()])
        return buf.getvalue()

    def render(self, fmt: str = "json", quiet: bool = False) -> str:
        return self.to_csv(quiet) if fmt == "csv" else self.to_json(quiet)


def error_document(command: str, error: dict, fmt: str = "json") -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["code", "message", "parameter"])
        writer.writerow([format_scalar(error.get(k)) for k in ("code", "message", "parameter")])
        return buf.getvalue()
    return _json({"command": command, "error": error}) + "\n"
