"""Standard/branch-free speedup tables from benchmark CSV.

Mirrors the six-column layout of the source study's average-speedup
table: one row per hardware tag, columns DD/TD/QD x non-SIMD/SIMD, each
cell the average over matching sizes of t_standard / t_branch_free.
"""

from __future__ import annotations

import sys

from .data import FigureSpec, group_rows, load_rows

PRECISIONS = ("dd", "td", "qd")
SIMD_STATES = ("off", "on")
SIMD_HEADER = {"off": "NS", "on": "SIMD"}


def speedup_cells(rows, warn=lambda msg: print(msg, file=sys.stderr)):
    """(hardware, precision, simd) -> average std/bf wall-time ratio.

    Rows missing one side of a (size, ...) pair are skipped with a
    warning, so a lopsided CSV cannot silently fabricate a ratio.
    """
    cells: dict = {}
    by_config = group_rows(rows, ("hardware", "precision", "simd"))
    for (hw, prec, simd), config_rows in by_config.items():
        by_n: dict = {}
        for r in config_rows:
            by_n.setdefault(r["n"], {})[r["variant"]] = float(r["wall_seconds"])
        ratios = []
        for n, pair in sorted(by_n.items(), key=lambda kv: int(kv[0])):
            if "std" in pair and "bf" in pair:
                if pair["bf"] > 0:
                    ratios.append(pair["std"] / pair["bf"])
            else:
                have = ", ".join(sorted(pair))
                warn(f"skipping {prec} simd={simd} n={n}: only variant(s) {have}")
        if ratios:
            cells[hw, prec, simd] = sum(ratios) / len(ratios)
    return cells


def render_speedup_table(spec: FigureSpec, fmt: str = "markdown") -> str:
    """Markdown or CSV text of the speedup table; also written to
    spec.out_path when set."""
    rows = load_rows(spec.csv_paths)
    cells = speedup_cells(rows)
    hardware = sorted({hw for hw, _, _ in cells})
    columns = [(p, s) for p in PRECISIONS for s in SIMD_STATES]

    def cell_text(hw, p, s):
        val = cells.get((hw, p, s))
        return f"{val:.2f}" if val is not None else "--"

    if fmt == "csv":
        head = ["hardware"] + [f"{p}_{SIMD_HEADER[s].lower()}" for p, s in columns]
        lines = [",".join(head)]
        for hw in hardware:
            lines.append(",".join([hw] + [cell_text(hw, p, s) for p, s in columns]))
        text = "\n".join(lines) + "\n"
    elif fmt == "markdown":
        head = ["hardware"] + [f"{p.upper()} {SIMD_HEADER[s]}" for p, s in columns]
        lines = ["| " + " | ".join(head) + " |"]
        lines.append("|" + "|".join("---" for _ in head) + "|")
        for hw in hardware:
            lines.append(
                "| " + " | ".join([hw] + [cell_text(hw, p, s) for p, s in columns]) + " |"
            )
        text = "\n".join(lines) + "\n"
    else:
        raise ValueError(f"unknown table format {fmt!r}")

    if spec.out_path:
        with open(spec.out_path, "w") as fh:
            fh.write(text)
    return text
