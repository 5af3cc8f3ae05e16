"""
fracdelay | utils | fd_csv.py

Locale-independent CSV output. Floats are written with a fixed format so repeated
runs produce byte-identical files.
"""

import csv
import os
from typing import Any, Iterable, Sequence

FLOAT_FORMAT = "{:.12e}"


def format_value(value: Any) -> str:
    """Render a single cell."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, complex):
        raise TypeError("Complex values must be split into re/im columns.")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float) or hasattr(value, "dtype"):
        return FLOAT_FORMAT.format(float(value))
    return str(value)


def write_csv(path: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """
    Write rows under a mandatory header. Returns the absolute path written.
    """
    if not header:
        raise ValueError("A CSV header is required.")

    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)

    with open(path, "w", encoding="utf-8", newline="") as csv_file:
        writer = csv.writer(csv_file, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            if len(row) != len(header):
                raise ValueError(
                    f"Row has {len(row)} cells, header has {len(header)}."
                )
            writer.writerow([format_value(cell) for cell in row])

    return os.path.abspath(path)


def read_csv(path: str):
    """Read a CSV written by write_csv. Returns (header, rows of strings)."""
    with open(path, "r", encoding="utf-8", newline="") as csv_file:
        reader = csv.reader(csv_file)
        header = next(reader)
        return header, list(reader)
