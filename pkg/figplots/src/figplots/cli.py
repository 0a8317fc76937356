"""Entry point: figplots PRESET CSV [--out STEM]."""

from __future__ import annotations

import argparse
import sys

from .figures import PRESETS, FigureSpec, SchemaError, render


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="figplots",
        description="Render a sweep CSV to PNG + SVG for one figure preset.")
    ap.add_argument("preset", choices=PRESETS)
    ap.add_argument("csv", help="sweep CSV produced for this preset")
    ap.add_argument("--out", default="",
                    help="output stem (default: preset id in the cwd)")
    ap.add_argument("--log-y", action="store_true",
                    help="log scale on the value axis (density plots)")
    args = ap.parse_args(argv)

    spec = FigureSpec(preset=args.preset, csv=args.csv, out=args.out,
                      log_y=args.log_y)
    try:
        png, svg = render(spec)
    except (SchemaError, FileNotFoundError) as exc:
        print(f"figplots: {exc}", file=sys.stderr)
        return 1
    print(png)
    print(svg)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
