#!/usr/bin/env python3
"""Compare the closed-form instability threshold against the discretized
bath oracle over a range of oscillator frequencies.

The closed form comes from the zero crossing of the static inverse
propagator determinant. The oracle builds the full quadratic model with an
explicit bath mode grid and bisects on the largest drift eigenvalue. They
should track each other to a few percent once the grid is fine enough;
the residual gap is the truncation and linewidth bias of the grid.
"""

import argparse
import csv
import sys
import pathlib

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

import numpy as np

from kosc import ModelParams, critical_coupling, hurwitz_threshold


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=float, default=1.0)
    ap.add_argument("--q-min", type=float, default=1.0)
    ap.add_argument("--q-max", type=float, default=12.0)
    ap.add_argument("--q-steps", type=int, default=12)
    ap.add_argument("--n-modes", type=int, default=500)
    ap.add_argument("--half-width", type=float, default=15.0)
    ap.add_argument("--eps", type=float, default=0.05)
    ap.add_argument("--out", default=None, help="optional CSV path")
    args = ap.parse_args()

    rows = []
    print(f"{'q':>8s} {'closed':>12s} {'oracle':>12s} {'rel dev':>10s}")
    for q in np.linspace(args.q_min, args.q_max, args.q_steps):
        p = ModelParams(q=float(q), r=args.r)
        want = critical_coupling(p)
        got = hurwitz_threshold(p, n_modes=args.n_modes,
                                half_width=args.half_width, eps=args.eps)
        dev = (got - want) / want
        print(f"{q:8.3f} {want:12.5f} {got:12.5f} {dev:+10.4%}")
        rows.append((float(q), want, got, dev))

    if args.out:
        with open(args.out, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["q", "alpha_c_closed", "alpha_c_oracle", "rel_dev"])
            w.writerows(rows)
        print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
