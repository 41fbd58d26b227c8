"""Deterministic file output: delimited tables, JSON, run manifests.

Identical data must produce identical bytes, so floats are fixed to 6
decimal places, JSON keys are sorted, line endings are LF, and the run
manifest carries content digests instead of timestamps.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field as dataclass_field
from pathlib import Path

from .errors import DataError

FLOAT_DECIMALS = 6


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value):
            return ""
        return f"{value:.{FLOAT_DECIMALS}f}"
    return str(value)


def write_csv(path, rows: list[dict], columns: list[str] | None = None) -> None:
    """Write long-form rows with a header; column order from the first row."""
    if columns is None:
        if not rows:
            raise DataError("cannot infer columns for an empty table")
        columns = list(rows[0])
    lines = [",".join(columns)]
    for row in rows:
        cells = []
        for col in columns:
            cell = _format_cell(row.get(col))
            if any(ch in cell for ch in ',"\n'):
                cell = '"' + cell.replace('"', '""') + '"'
            cells.append(cell)
        lines.append(",".join(cells))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def _round_floats(obj):
    if isinstance(obj, float):
        if math.isnan(obj):
            return None
        return round(obj, FLOAT_DECIMALS)
    if isinstance(obj, dict):
        return {key: _round_floats(val) for key, val in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(val) for val in obj]
    return obj


def json_bytes(obj) -> bytes:
    return (json.dumps(_round_floats(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode(
        "utf-8"
    )


def write_json(path, obj) -> None:
    Path(path).write_bytes(json_bytes(obj))


def sha256_file(path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


@dataclass
class RunManifest:
    """Everything needed to re-execute a run and check its outputs."""

    command: str
    config: dict
    version: str
    inputs: dict[str, str] = dataclass_field(default_factory=dict)
    outputs: dict[str, str] = dataclass_field(default_factory=dict)

    def add_input(self, path) -> None:
        self.inputs[Path(path).name] = sha256_file(path)

    def add_output(self, path) -> None:
        self.outputs[Path(path).name] = sha256_file(path)

    def write(self, path) -> None:
        write_json(
            path,
            {
                "command": self.command,
                "config": self.config,
                "version": self.version,
                "inputs": self.inputs,
                "outputs": self.outputs,
            },
        )
