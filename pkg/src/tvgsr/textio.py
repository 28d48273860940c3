"""Delimited-text serialization for coordinates, signals, masks, tables, and manifests.

All numeric output uses 17 significant digits so that values round-trip
losslessly through text. The default delimiter is a comma.
"""

from __future__ import annotations

import os

import numpy as np

from .exceptions import InputError, ParseError

DELIMITER = ","


def format_float(x) -> str:
    """Render a float with 17 significant digits (lossless round-trip)."""
    return f"{float(x):.17g}"


def _split(line: str, delimiter: str) -> list[str]:
    return [tok.strip() for tok in line.rstrip("\n").split(delimiter)]


def _is_numeric_row(tokens) -> bool:
    try:
        for tok in tokens:
            float(tok)
    except ValueError:
        return False
    return True


def write_matrix(path, matrix, header=None, delimiter=DELIMITER):
    """Write a 2-D array, one row per line, optionally preceded by a header row."""
    matrix = np.atleast_2d(np.asarray(matrix, dtype=float))
    with open(path, "w", encoding="utf-8") as fh:
        if header is not None:
            fh.write(delimiter.join(str(h) for h in header) + "\n")
        for row in matrix:
            fh.write(delimiter.join(format_float(v) for v in row) + "\n")


def read_matrix(path, delimiter=DELIMITER) -> np.ndarray:
    """Read a numeric matrix; a leading non-numeric row is treated as a header."""
    rows = []
    width = None
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            tokens = _split(line, delimiter)
            if lineno == 1 and not _is_numeric_row(tokens):
                continue  # auto-detected header
            try:
                values = [float(tok) for tok in tokens]
            except ValueError as exc:
                bad = next(i for i, t in enumerate(tokens) if not _is_numeric_row([t]))
                raise ParseError(
                    f"{path}: line {lineno}, column {bad + 1}: not a number: {tokens[bad]!r}"
                ) from exc
            if width is None:
                width = len(values)
            elif len(values) != width:
                raise ParseError(
                    f"{path}: line {lineno}: expected {width} columns, found {len(values)}"
                )
            rows.append(values)
    if not rows:
        raise ParseError(f"{path}: no data rows")
    return np.asarray(rows, dtype=float)


def write_coordinates(path, coords, node_ids=None, delimiter=DELIMITER):
    """Write one node per row with the required node_id,latitude,longitude header."""
    coords = np.asarray(coords, dtype=float)
    if coords.ndim != 2 or coords.shape[1] != 2:
        raise InputError(f"coordinates must be N x 2, got shape {coords.shape}")
    if node_ids is None:
        node_ids = [str(i) for i in range(coords.shape[0])]
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(delimiter.join(["node_id", "latitude", "longitude"]) + "\n")
        for nid, (lat, lon) in zip(node_ids, coords):
            fh.write(delimiter.join([str(nid), format_float(lat), format_float(lon)]) + "\n")


def read_coordinates(path, delimiter=DELIMITER):
    """Read a coordinate file.

    The header row is mandatory; node order in the file fixes the node index.
    Returns (node_ids, coords) with coords an N x 2 float array.
    """
    node_ids = []
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln for ln in fh if ln.strip()]
    if not lines:
        raise ParseError(f"{path}: empty coordinate file")
    header = _split(lines[0], delimiter)
    if len(header) != 3:
        raise ParseError(f"{path}: line 1: expected 3 header columns, found {len(header)}")
    if _is_numeric_row(header):
        raise ParseError(f"{path}: line 1: header row required (node_id,latitude,longitude)")
    for lineno, line in enumerate(lines[1:], start=2):
        tokens = _split(line, delimiter)
        if len(tokens) != 3:
            raise ParseError(f"{path}: line {lineno}: expected 3 columns, found {len(tokens)}")
        try:
            lat, lon = float(tokens[1]), float(tokens[2])
        except ValueError as exc:
            raise ParseError(f"{path}: line {lineno}: non-numeric coordinate {tokens[1:]!r}") from exc
        node_ids.append(tokens[0])
        rows.append((lat, lon))
    if not rows:
        raise ParseError(f"{path}: no coordinate rows")
    return node_ids, np.asarray(rows, dtype=float)


def write_mask(path, mask, delimiter=DELIMITER):
    write_matrix(path, np.asarray(mask, dtype=float), delimiter=delimiter)


def read_mask(path, delimiter=DELIMITER) -> np.ndarray:
    mask = read_matrix(path, delimiter=delimiter)
    if not np.all((mask == 0.0) | (mask == 1.0)):
        raise ParseError(f"{path}: mask entries must be 0 or 1")
    return mask


def write_loss_trace(path, trace, delimiter=DELIMITER):
    """Write a loss trace as two columns: iteration index, loss value."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(delimiter.join(["iteration", "loss"]) + "\n")
        for i, value in enumerate(np.asarray(trace, dtype=float)):
            fh.write(delimiter.join([str(i), format_float(value)]) + "\n")


def write_table(path, header, rows, delimiter=DELIMITER):
    """Write a table of heterogeneous rows; floats get the 17-digit treatment."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(delimiter.join(str(h) for h in header) + "\n")
        for row in rows:
            cells = []
            for cell in row:
                if isinstance(cell, float) or isinstance(cell, np.floating):
                    cells.append(format_float(cell))
                else:
                    cells.append(str(cell))
            fh.write(delimiter.join(cells) + "\n")


def write_keyvalues(path, mapping):
    """Write a flat key=value text file (manifests, config echoes, metrics)."""
    with open(path, "w", encoding="utf-8") as fh:
        for key, value in mapping.items():
            if isinstance(value, float) or isinstance(value, np.floating):
                value = format_float(value)
            fh.write(f"{key}={value}\n")


def read_keyvalues(path) -> dict:
    """Read a flat key=value file; '#' starts a comment, blank lines are skipped."""
    if not os.path.exists(path):
        raise ParseError(f"{path}: no such file")
    out = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.split("#", 1)[0].strip()
            if not stripped:
                continue
            if "=" not in stripped:
                raise ParseError(f"{path}: line {lineno}: expected key=value, got {line.rstrip()!r}")
            key, value = stripped.split("=", 1)
            out[key.strip()] = value.strip()
    return out
