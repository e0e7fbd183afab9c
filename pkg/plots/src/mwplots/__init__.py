"""Benchmark CSV rendering: log-scale time curves and speedup tables."""

from .data import FigureSpec, SchemaError, load_rows
from .figures import render_time_curves
from .tables import render_speedup_table, speedup_cells

__all__ = [
    "FigureSpec",
    "SchemaError",
    "load_rows",
    "render_time_curves",
    "render_speedup_table",
    "speedup_cells",
]

__version__ = "0.1.0"
