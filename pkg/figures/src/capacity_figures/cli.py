"""render_figure: draw one standard figure from CLI-written CSV data.

Usage: render_figure <fig1..fig7> --data <dir> --out <file>

The image format follows the output extension.  Rendering only reads CSV
cells; if the data is missing or malformed the command fails without
writing anything.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import RENDERERS
from .loader import FigureDataError, FigureSpec


def main(argv=None):
    parser = argparse.ArgumentParser(prog="render_figure")
    parser.add_argument("figure", choices=sorted(RENDERERS))
    parser.add_argument("--data", required=True, help="directory with the CSV data")
    parser.add_argument("--out", required=True, help="output image path")
    parser.add_argument("--dpi", type=int, default=150)
    args = parser.parse_args(argv)
    spec = FigureSpec(
        figure=args.figure,
        data_dir=Path(args.data),
        out_path=Path(args.out),
        dpi=args.dpi,
    )
    try:
        path = RENDERERS[args.figure](spec)
    except FigureDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
