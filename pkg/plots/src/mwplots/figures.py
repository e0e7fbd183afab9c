"""Log-scale time-vs-size curves from benchmark CSV."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .data import FigureSpec, group_rows, load_rows, series_of

LABEL_ORDER = {"dd": 0, "td": 1, "qd": 2}


def _legend_label(key: tuple, keys: tuple) -> str:
    parts = dict(zip(keys, key))
    bits = [parts.get("precision", "").upper()]
    if parts.get("variant"):
        bits.append("BF" if parts["variant"] == "bf" else "Std")
    if parts.get("simd") == "on":
        bits.append("SIMD")
    return " ".join(b for b in bits if b)


def render_time_curves(spec: FigureSpec) -> str:
    """One line per (precision, variant, simd) group, log y-axis.

    Returns the output path.  Raises SchemaError on missing columns and
    ValueError when the CSV yields no drawable group.
    """
    rows = load_rows(spec.csv_paths)
    groups = group_rows(rows, spec.group_keys)
    groups = {k: g for k, g in groups.items() if g}
    if not groups:
        raise ValueError("no data groups to draw")

    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    order = sorted(
        groups,
        key=lambda k: (LABEL_ORDER.get(k[0], 9), k[1:]),
    )
    drew = 0
    for key in order:
        xs, ys = series_of(groups[key], spec.x_key, spec.y_key)
        if not xs:
            continue
        ax.plot(xs, ys, marker="o", label=_legend_label(key, spec.group_keys))
        drew += 1
    if drew == 0:
        plt.close(fig)
        raise ValueError("no rows with usable x/y values")
    ax.set_yscale("log")
    ax.set_xlabel("matrix size n")
    ax.set_ylabel("computation time (s)")
    if spec.title:
        ax.set_title(spec.title)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    # empty metadata keeps the bytes deterministic for identical input
    fig.savefig(spec.out_path, dpi=110, metadata={"Software": None})
    plt.close(fig)
    return spec.out_path
