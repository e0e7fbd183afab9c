"""mwplot: render mwbench CSV into figures or speedup tables."""

from __future__ import annotations

import argparse
import sys

from .data import FigureSpec, SchemaError
from .figures import render_time_curves
from .tables import render_speedup_table


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="mwplot", description="render benchmark CSV output"
    )
    parser.add_argument("--csv", required=True, nargs="+", help="input CSV path(s)")
    parser.add_argument("--out", required=True, help="output image/table path")
    parser.add_argument("--kind", choices=("curves", "speedup"), default="curves")
    parser.add_argument("--title", default="")
    parser.add_argument(
        "--table-format", choices=("markdown", "csv"), default="markdown"
    )
    args = parser.parse_args(argv)

    spec = FigureSpec(csv_paths=list(args.csv), out_path=args.out, title=args.title)
    try:
        if args.kind == "curves":
            render_time_curves(spec)
        else:
            render_speedup_table(spec, fmt=args.table_format)
    except (SchemaError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    print(args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
