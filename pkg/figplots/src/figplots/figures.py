"""Figure builders, one per preset family.

fig1*/fig4* are root-locus panels: real parts solid, imaginary parts
dotted, with an inset that replots the imaginary part of the growing
branches. fig2 is the correlation level against oscillator frequency, one
curve per damping series. fig3* are the decay-modification curves; fig3a
carries the larger-damping series in an inset.

Rendering is deterministic: fixed style, fixed svg hash salt, no
timestamps in the output files.
"""

from __future__ import annotations

import pathlib
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .io import SchemaError, Table, read_table, require_columns

plt.rcParams["svg.hashsalt"] = "figplots"

SPECTRUM_COLS = ("q", "root_index", "re_z", "im_z")
DENSITY_COLS = ("q", "r", "c0", "diverged")
ZENO_COLS = ("q", "r", "xi")

PRESETS = ("fig1a", "fig1b", "fig1c", "fig2",
           "fig3a", "fig3b", "fig4a", "fig4b", "fig4c")

_FAMILY = {"fig1": "spectrum", "fig4": "spectrum",
           "fig2": "density", "fig3": "zeno"}


@dataclass(frozen=True)
class FigureSpec:
    preset: str
    csv: str | pathlib.Path
    out: str | pathlib.Path = ""
    log_y: bool = False
    # inset position in axes fraction (x0, y0, width, height)
    inset_rect: tuple = (0.58, 0.58, 0.38, 0.36)

    @property
    def family(self) -> str:
        fam = _FAMILY.get(self.preset[:4])
        if fam is None or self.preset not in PRESETS:
            raise SchemaError(f"unknown preset '{self.preset}'")
        return fam

    @property
    def out_stem(self) -> pathlib.Path:
        return pathlib.Path(self.out or self.preset)


def _branch_arrays(table: Table, branch: float):
    rows = table.where("root_index", branch)
    q = np.array([r["q"] for r in rows])
    re = np.array([r["re_z"] for r in rows])
    im = np.array([r["im_z"] for r in rows])
    return q, re, im


def _spectrum_figure(spec: FigureSpec, table: Table):
    require_columns(table, SPECTRUM_COLS)
    fig, ax = plt.subplots(figsize=(5.4, 4.0))
    colors = plt.rcParams["axes.prop_cycle"].by_key()["color"]
    branches = sorted(set(table.column("root_index")))
    per_branch = []
    for i, b in enumerate(branches):
        q, re, im = _branch_arrays(table, b)
        c = colors[i % len(colors)]
        ax.plot(q, re, "-", color=c, lw=1.2)
        ax.plot(q, im, ":", color=c, lw=1.2)
        per_branch.append((q, im, c))
    ax.axhline(0.0, color="0.75", lw=0.6, zorder=0)
    ax.set_xlabel("q")
    ax.set_ylabel("mode frequency (Re solid, Im dotted)")
    ax.set_title(spec.preset)

    # inset: imaginary part of the growing branches (all branches if the
    # sweep never goes unstable)
    growing = [t for t in per_branch if np.nanmax(t[1]) > 0.0]
    axin = ax.inset_axes(spec.inset_rect)
    for q, im, c in (growing or per_branch):
        axin.plot(q, im, ":", color=c, lw=1.0)
    axin.axhline(0.0, color="0.6", lw=0.6)
    axin.set_title("Im z", fontsize=8)
    axin.tick_params(labelsize=7)
    return fig


def _density_figure(spec: FigureSpec, table: Table):
    require_columns(table, DENSITY_COLS)
    fig, ax = plt.subplots(figsize=(5.4, 4.0))
    for rv in table.distinct("r"):
        rows = table.where("r", rv)
        q = np.array([r["q"] for r in rows])
        c0 = np.array([float("nan") if r["diverged"] else r["c0"]
                       for r in rows])
        ax.plot(q, c0, "-", lw=1.2, label=f"r = {rv:g}")
    if spec.log_y:
        ax.set_yscale("log")
    ax.set_xlabel("q")
    ax.set_ylabel("c0")
    ax.set_title(spec.preset)
    ax.legend(fontsize=8)
    return fig


def _zeno_figure(spec: FigureSpec, table: Table):
    require_columns(table, ZENO_COLS)
    fig, ax = plt.subplots(figsize=(5.4, 4.0))
    series = sorted(table.distinct("r"))
    # fig3a: smallest damping series in the main panel, the rest inset
    split = spec.preset == "fig3a" and len(series) > 1
    main, inset = (series[:1], series[1:]) if split else (series, [])
    for rv in main:
        rows = table.where("r", rv)
        q = np.array([r["q"] for r in rows])
        xi = np.array([r["xi"] for r in rows])
        ax.plot(q, xi, "-", lw=1.2, label=f"r = {rv:g}")
    ax.axhline(0.0, color="0.75", lw=0.6, zorder=0)
    ax.set_xlabel("q")
    ax.set_ylabel("xi")
    ax.set_title(spec.preset)
    ax.legend(fontsize=8)
    if inset:
        axin = ax.inset_axes(spec.inset_rect)
        for rv in inset:
            rows = table.where("r", rv)
            q = np.array([r["q"] for r in rows])
            xi = np.array([r["xi"] for r in rows])
            axin.plot(q, xi, "-", lw=1.0, label=f"r = {rv:g}")
        axin.legend(fontsize=6)
        axin.tick_params(labelsize=7)
    return fig


_BUILDERS = {"spectrum": _spectrum_figure,
             "density": _density_figure,
             "zeno": _zeno_figure}


def build_figure(spec: FigureSpec):
    """Read the CSV and return the assembled matplotlib Figure.

    Raises before any output file is touched, so a bad or empty CSV never
    leaves a partial image behind.
    """
    builder = _BUILDERS[spec.family]  # validates the preset id first
    table = read_table(spec.csv)
    return builder(spec, table)


def render(spec: FigureSpec) -> tuple[pathlib.Path, pathlib.Path]:
    """Render one preset CSV to <out>.png and <out>.svg."""
    fig = build_figure(spec)
    stem = spec.out_stem
    if stem.parent != pathlib.Path(""):
        stem.parent.mkdir(parents=True, exist_ok=True)
    png = stem.with_suffix(".png")
    svg = stem.with_suffix(".svg")
    try:
        fig.savefig(png, dpi=150)
        fig.savefig(svg, metadata={"Date": None})
    finally:
        plt.close(fig)
    return png, svg
