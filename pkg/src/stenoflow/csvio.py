"""Deterministic CSV emission and parsing.

Layout: a ``# stenoflow v1`` version line, ``# key = value`` metadata
comments, one header row, then data rows with 12 significant digits.  The
byte content is a pure function of the data, so golden-file comparison works.
"""

from __future__ import annotations

from dataclasses import fields
from pathlib import Path

import numpy as np

from .artery import FlowParams
from .config import KEY_TO_FIELD
from .errors import StenoflowError

VERSION_LINE = "# stenoflow v1"


def format_value(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".12g")


def params_metadata(params: FlowParams) -> list[tuple[str, str]]:
    """Canonical ordered metadata pairs for a parameter set."""
    field_to_key = {v: k for k, v in KEY_TO_FIELD.items()}
    return [
        (field_to_key.get(f.name, f.name), format_value(getattr(params, f.name)))
        for f in fields(FlowParams)
    ]


def write_csv(path, columns, rows, metadata=()) -> Path:
    """Write rows of numbers with ordered metadata comments."""
    path = Path(path)
    lines = [VERSION_LINE]
    lines.extend(f"# {key} = {value}" for key, value in metadata)
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(format_value(v) for v in row))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
    return path


def read_csv(path):
    """Parse a stenoflow CSV back into (metadata, columns, float array).

    The array has shape (n_rows, n_columns); files without data rows yield an
    empty (0, n_columns) array.
    """
    path = Path(path)
    metadata: dict[str, str] = {}
    columns: list[str] | None = None
    data: list[list[float]] = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line.lstrip("#").strip()
                if "=" in body:
                    key, _, value = body.partition("=")
                    metadata[key.strip()] = value.strip()
                continue
            if columns is None:
                columns = [c.strip() for c in line.split(",")]
                continue
            try:
                data.append([float(v) for v in line.split(",")])
            except ValueError as exc:
                raise StenoflowError(f"{path}: bad data row {line!r}: {exc}") from exc
    if columns is None:
        raise StenoflowError(f"{path}: no header row found")
    array = np.array(data, dtype=float) if data else np.empty((0, len(columns)))
    return metadata, columns, array
