"""Command-line sweeps over q with CSV/JSON output, one preset per figure.

Every output file starts with `#` comment lines recording the tool version
and the full configuration, then a column-name row, then one row per grid
point (spectrum emits one row per root). Floats are printed with 17
significant digits and rows are assembled in grid order, so identical
configurations produce byte-identical files. KOSC_THREADS caps worker
threads for the per-point computations (default 1).
"""

from __future__ import annotations

import argparse
import enum
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from . import __version__
from .dispersion import critical_coupling_report, spectrum
from .errors import DomainError, KoscError
from .model import Approx, ModelParams
from .oracle import (discretize_bath, drift_matrix, max_re_eig,
                     oracle_number_density, truncated_weight)
from .steady import (ZenoConvention, correlation_c0, distribution_function,
                     zeno_parameter)


class Subcommand(enum.Enum):
    spectrum = "spectrum"
    density = "density"
    zeno = "zeno"
    fdr = "fdr"
    critical = "critical"
    oracle = "oracle"
    figure = "figure"


@dataclass(frozen=True)
class SweepConfig:
    subcommand: Subcommand
    approx: Approx = Approx.NonRWA
    r: float = 1.0
    alpha: float = 0.0
    q_min: float = 0.1
    q_max: float = 20.0
    q_steps: int = 200
    convention: ZenoConvention = ZenoConvention.Literal
    out: str = ""
    format: str = "csv"
    n_modes: int = 400
    half_width: float = 10.0
    eps: float | None = None

    def __post_init__(self):
        for name in ("r", "alpha", "q_min", "q_max"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v)):
                raise DomainError(name, "must be finite")
        if not self.q_min < self.q_max:
            raise DomainError("q_min", "must satisfy q_min < q_max")
        if self.q_steps < 2:
            raise DomainError("q_steps", "must be >= 2")
        if self.format not in ("csv", "json"):
            raise DomainError("format", "must be csv or json")

    def grid(self) -> np.ndarray:
        return np.linspace(self.q_min, self.q_max, self.q_steps)

    def params(self, q: float) -> ModelParams:
        return ModelParams(q=float(q), r=self.r, alpha=self.alpha, approx=self.approx)


@dataclass(frozen=True)
class FigurePreset:
    id: str
    expansion: tuple  # one SweepConfig per series, concatenated into one file
    note: str = ""


def _preset_table() -> dict:
    def cfg(sub, approx, r, alpha=100.0):
        return SweepConfig(subcommand=Subcommand(sub), approx=approx, r=r, alpha=alpha)

    three_r = (0.1, 1.0, 10.0)
    rnote = ("preset r follows the subfigure labels (0.1, 1, 10); "
             "a conflicting caption value 0.01 exists and is not used")
    t = {}
    for suffix, r in zip("abc", three_r):
        t[f"fig1{suffix}"] = FigurePreset(
            f"fig1{suffix}", (cfg("spectrum", Approx.NonRWA, r),), note=rnote)
        t[f"fig4{suffix}"] = FigurePreset(
            f"fig4{suffix}", (cfg("spectrum", Approx.RWA, r),), note=rnote)
    t["fig2"] = FigurePreset(
        "fig2", tuple(cfg("density", Approx.NonRWA, r) for r in three_r),
        note="alpha defaults to 100 (not pinned upstream); override with --alpha")
    t["fig3a"] = FigurePreset(
        "fig3a", tuple(cfg("zeno", Approx.NonRWA, r) for r in three_r),
        note="alpha defaults to 100 (not pinned upstream); override with --alpha")
    t["fig3b"] = FigurePreset(
        "fig3b", tuple(cfg("zeno", Approx.RWA, r) for r in three_r),
        note="alpha defaults to 100 (not pinned upstream); override with --alpha")
    return t


PRESETS = _preset_table()

_COLUMNS = {
    Subcommand.spectrum: ("q", "root_index", "re_z", "im_z", "stability", "residual"),
    Subcommand.density: ("q", "r", "alpha", "c0", "n_avg", "abs_err", "diverged"),
    Subcommand.zeno: ("q", "r", "alpha", "xi", "regime", "convention"),
    Subcommand.fdr: ("z", "q", "r", "alpha", "approx", "f_offdiag", "residual"),
    Subcommand.critical: ("q", "r", "alpha_c", "closed_form_rinv2", "closed_form_r2"),
    Subcommand.oracle: ("q", "r", "alpha", "approx", "n_modes", "half_width", "eps",
                        "n_oracle", "n_keldysh", "rel_dev", "max_re_eig",
                        "weight_truncated"),
}


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, float):
        return "%.17g" % v
    return str(v)


def _json_safe(v):
    # strict JSON has no NaN or Infinity
    if isinstance(v, float) and not math.isfinite(v):
        return None if math.isnan(v) else ("inf" if v > 0 else "-inf")
    return v


def _rows_for_point(config: SweepConfig, q: float):
    p = config.params(q)
    sub = config.subcommand
    if sub == Subcommand.spectrum:
        return [(p.q, i, m.z.real, m.z.imag, m.stability.value, m.residual)
                for i, m in enumerate(spectrum(p))]
    if sub == Subcommand.density:
        rep = correlation_c0(p)
        return [(p.q, p.r, p.alpha, rep.c0, rep.n_avg, rep.abs_err, rep.diverged)]
    if sub == Subcommand.zeno:
        rep = zeno_parameter(p, config.convention)
        return [(p.q, p.r, p.alpha, rep.xi, rep.regime.value, rep.convention.value)]
    if sub == Subcommand.fdr:
        # evaluated on resonance, z = q (safely away from the z = 0 pole)
        df = distribution_function(p.q, p)
        return [(p.q, p.q, p.r, p.alpha, p.approx.value,
                 float(df.matrix[0, 1].real), df.residual)]
    if sub == Subcommand.critical:
        rep = critical_coupling_report(p)
        return [(p.q, p.r, rep.alpha_c, rep.closed_form_rinv2, rep.closed_form_r2)]
    if sub == Subcommand.oracle:
        b = discretize_bath(p, config.n_modes, config.half_width, eps=config.eps)
        mre = max_re_eig(drift_matrix(p, b))
        if mre < 0.0:
            n_o = oracle_number_density(p, config.n_modes, config.half_width,
                                        eps=config.eps)
        else:
            n_o = math.nan
        rep = correlation_c0(p)
        n_k = rep.n_avg
        rel = abs(n_o - n_k) / max(abs(n_k), 1e-12)
        return [(p.q, p.r, p.alpha, p.approx.value, config.n_modes,
                 config.half_width, b.eps, n_o, n_k, rel, mre,
                 truncated_weight(config.half_width))]
    raise DomainError("subcommand", f"not a sweep subcommand: {sub}")


def _config_comment(config: SweepConfig) -> str:
    bits = [f"subcommand={config.subcommand.value}", f"approx={config.approx.value}",
            f"r={_fmt(config.r)}", f"alpha={_fmt(config.alpha)}",
            f"q_min={_fmt(config.q_min)}", f"q_max={_fmt(config.q_max)}",
            f"q_steps={config.q_steps}"]
    if config.subcommand == Subcommand.zeno:
        bits.append(f"convention={config.convention.value}")
    if config.subcommand == Subcommand.oracle:
        bits += [f"n_modes={config.n_modes}", f"half_width={_fmt(config.half_width)}",
                 f"eps={'default' if config.eps is None else _fmt(config.eps)}"]
    return " ".join(bits)


def _n_workers() -> int:
    try:
        return max(1, int(os.environ.get("KOSC_THREADS", "1")))
    except ValueError:
        return 1


def _sweep(configs, header_lines, columns, out_path, fmt):
    """Run one or more config series, concatenate rows, write one file.

    Per-point computation errors become `# ERROR` marker lines in grid
    position (CSV) or error records (JSON); the exit code is then 1.
    """
    all_rows = []
    failed = 0
    for config in configs:
        grid = config.grid()

        def point(q):
            try:
                return _rows_for_point(config, q)
            except KoscError as e:
                return [("#ERROR", float(q), str(e))]

        workers = _n_workers()
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(point, grid))
        else:
            results = [point(q) for q in grid]
        for rows in results:
            for row in rows:
                if row and row[0] == "#ERROR":
                    failed += 1
                all_rows.append(row)

    if fmt == "json":
        payload = {
            "version": __version__,
            "config": header_lines,
            "columns": list(columns),
            "rows": [[_json_safe(v) for v in row]
                     for row in all_rows if row[0] != "#ERROR"],
            "errors": [{"q": row[1], "message": row[2]}
                       for row in all_rows if row[0] == "#ERROR"],
        }
        text = json.dumps(payload, indent=1, sort_keys=True,
                          default=_fmt) + "\n"
    else:
        lines = [f"# kosc {__version__}"]
        lines += [f"# {h}" for h in header_lines]
        lines.append(",".join(columns))
        for row in all_rows:
            if row[0] == "#ERROR":
                lines.append(f"# ERROR q={_fmt(row[1])}: {row[2]}")
            else:
                lines.append(",".join(_fmt(v) for v in row))
        text = "\n".join(lines) + "\n"

    with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    return 1 if failed else 0


def run(config: SweepConfig) -> int:
    """Execute one sweep; returns the process exit status."""
    out = config.out or f"{config.subcommand.value}.{config.format}"
    header = [_config_comment(config)]
    return _sweep([config], header, _COLUMNS[config.subcommand], out, config.format)


def run_preset(preset_id: str, out: str = "", fmt: str = "csv",
               alpha: float | None = None) -> int:
    preset = PRESETS[preset_id]
    configs = [replace(c, format=fmt) if alpha is None
               else replace(c, alpha=alpha, format=fmt)
               for c in preset.expansion]
    out_path = out or f"{preset_id}.{fmt}"
    header = [f"preset={preset_id}"]
    if preset.note:
        header.append(f"note: {preset.note}")
    header += [_config_comment(c) for c in configs]
    columns = _COLUMNS[configs[0].subcommand]
    return _sweep(configs, header, columns, out_path, fmt)


def list_presets(stream=None) -> None:
    stream = stream or sys.stdout
    for pid in sorted(PRESETS):
        preset = PRESETS[pid]
        for c in preset.expansion:
            print(f"{pid:6s} {_config_comment(c)}", file=stream)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kosc", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="subcommand", required=True)

    def add_common(sp, oracle_opts=False):
        sp.add_argument("--approx", choices=["nrwa", "rwa"], default="nrwa")
        sp.add_argument("--r", type=float, default=1.0)
        sp.add_argument("--alpha", type=float, default=0.0)
        sp.add_argument("--q-min", type=float, default=0.1)
        sp.add_argument("--q-max", type=float, default=20.0)
        sp.add_argument("--q-steps", type=int, default=200)
        sp.add_argument("--out", default="")
        sp.add_argument("--format", choices=["csv", "json"], default="csv")
        if oracle_opts:
            sp.add_argument("--n-modes", type=int, default=400)
            sp.add_argument("--half-width", type=float, default=10.0)
            sp.add_argument("--eps", type=float, default=None)

    for name in ("spectrum", "density", "fdr", "critical"):
        add_common(sub.add_parser(name))
    sp = sub.add_parser("zeno")
    add_common(sp)
    sp.add_argument("--convention", choices=["literal", "normalized"],
                    default="literal")
    add_common(sub.add_parser("oracle"), oracle_opts=True)
    fp = sub.add_parser("figure")
    fp.add_argument("preset", nargs="?", choices=sorted(PRESETS), default=None)
    fp.add_argument("--out", default="")
    fp.add_argument("--format", choices=["csv", "json"], default="csv")
    fp.add_argument("--alpha", type=float, default=None)
    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.subcommand == "figure":
            if args.preset is None:
                list_presets()
                return 0
            return run_preset(args.preset, out=args.out, fmt=args.format,
                              alpha=args.alpha)
        kw = dict(subcommand=Subcommand(args.subcommand),
                  approx=Approx(args.approx), r=args.r, alpha=args.alpha,
                  q_min=args.q_min, q_max=args.q_max, q_steps=args.q_steps,
                  out=args.out, format=args.format)
        if args.subcommand == "zeno":
            kw["convention"] = ZenoConvention(args.convention)
        if args.subcommand == "oracle":
            kw.update(n_modes=args.n_modes, half_width=args.half_width,
                      eps=args.eps)
        return run(SweepConfig(**kw))
    except DomainError as e:
        print(f"kosc: {e}", file=sys.stderr)
        return 2
    except KoscError as e:
        print(f"kosc: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
