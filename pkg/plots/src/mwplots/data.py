"""Benchmark CSV loading and grouping.

Consumes the mwbench CSV schema (suite, precision, variant, simd, scheme,
threads, n, repeat, wall_seconds, digits_min, digits_max, hardware,
timestamp) purely through the file format; nothing here imports the
arithmetic package.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

REQUIRED_COLUMNS = ("precision", "variant", "simd", "n", "wall_seconds")


class SchemaError(ValueError):
    """The CSV lacks columns the renderer needs."""


@dataclass
class FigureSpec:
    """What to draw: input CSV path(s), grouping keys, output path."""

    csv_paths: list
    out_path: str
    group_keys: tuple = ("precision", "variant", "simd")
    x_key: str = "n"
    y_key: str = "wall_seconds"
    title: str = ""

    def __post_init__(self):
        if isinstance(self.csv_paths, (str, Path)):
            self.csv_paths = [self.csv_paths]


def load_rows(paths) -> list[dict]:
    rows: list[dict] = []
    for path in paths:
        with open(path, newline="") as fh:
            reader = csv.DictReader(fh)
            header = reader.fieldnames or []
            missing = [c for c in REQUIRED_COLUMNS if c not in header]
            if missing:
                raise SchemaError(
                    f"{path}: missing column(s) {', '.join(missing)}; "
                    f"found {', '.join(header)}"
                )
            rows.extend(reader)
    return rows


def group_rows(rows, keys) -> dict:
    groups: dict = {}
    for row in rows:
        try:
            label = tuple(row[k] for k in keys)
        except KeyError as err:
            raise SchemaError(f"grouping key {err} not present in CSV") from err
        groups.setdefault(label, []).append(row)
    return groups


def series_of(rows, x_key="n", y_key="wall_seconds"):
    pts = sorted(
        (int(r[x_key]), float(r[y_key]))
        for r in rows
        if r.get(x_key) and r.get(y_key)
    )
    return [p[0] for p in pts], [p[1] for p in pts]
