"""CSV / JSON readers and writers for pipeline artifacts.

All numeric text output is rendered at 9 significant digits so that
fixed inputs give byte-identical files across platforms and runs.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

import numpy as np

from .errors import InputError


def fmt_number(x) -> str:
    """Canonical text for a number: ints plain, floats at 9 sig digits."""
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if x == 0.0:
        x = 0.0  # avoid "-0"
    return f"{x:.9g}"


def round9(x) -> float:
    """Float rounded to its 9-significant-digit text form (for JSON)."""
    return float(fmt_number(x))


def write_text(path, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from exc


def write_json(path, obj) -> None:
    write_text(path, json.dumps(obj, indent=2) + "\n")


def table_csv(corner: str, columns, row_labels, values) -> str:
    """One header row then one row per label, all cells canonical text."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([corner, *columns])
    for label, row in zip(row_labels, np.asarray(values)):
        writer.writerow([label, *(fmt_number(v) for v in row)])
    return out.getvalue()


def write_table_csv(path, corner, columns, row_labels, values) -> None:
    write_text(path, table_csv(corner, columns, row_labels, values))


def table_json(columns, row_labels, values, **meta):
    body = [[round9(v) for v in row] for row in np.asarray(values)]
    return {"columns": list(columns), "index": list(row_labels),
            "values": body, **meta}


@dataclass(eq=False)
class SignatureTable:
    """Labelled numeric table read back from a signature CSV."""

    labels: tuple[str, ...]
    columns: tuple[str, ...]
    values: np.ndarray


def parse_signature_csv(text: str) -> SignatureTable:
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if len(rows) < 2:
        raise InputError("signature CSV needs a header and at least one row")
    header = rows[0]
    if len(header) < 2:
        raise InputError("signature CSV header needs vertex plus value columns")
    columns = tuple(c.strip() for c in header[1:])
    labels = []
    values = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise InputError(
                f"line {lineno}: expected {len(header)} cells, got {len(row)}"
            )
        labels.append(row[0].strip())
        try:
            values.append([float(c) for c in row[1:]])
        except ValueError as exc:
            raise InputError(f"line {lineno}: non-numeric cell: {exc}") from exc
    return SignatureTable(tuple(labels), columns, np.array(values))


def read_signature_csv(path) -> SignatureTable:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_signature_csv(text)
