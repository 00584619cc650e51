"""Render simulator CSV output to figures.

A pure viewer: numbers are plotted exactly as they appear in the CSV, no
re-computation. Three kinds are understood, matching the simulator CLI's
output schemas:

* spectrum: omega_meV plus one labeled line per S_* method column,
* sweep:    pole branch real parts vs the swept value (anticrossing),
* evolve:   magnitudes of the reconstructed cavity-row components vs time.

PNG output is fixed at 150 dpi so byte-identical input gives byte-identical
images; SVG is available behind --format for print use.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

KINDS = ("spectrum", "sweep", "evolve")

_REQUIRED = {
    "spectrum": ("omega_meV",),
    "sweep": ("swept_value", "re_w1", "im_w1", "re_w2", "im_w2", "re_w3", "im_w3"),
    "evolve": (
        "t_hbar_per_meV",
        "residue_a_re",
        "residue_a_im",
        "residue_A_re",
        "residue_A_im",
        "residue_B_re",
        "residue_B_im",
    ),
}


class SchemaError(Exception):
    """CSV header/content does not match the declared kind."""


@dataclass(frozen=True)
class PlotJob:
    input_csv: str
    kind: str
    output: str
    title: str | None = None
    xlabel: str | None = None
    ylabel: str | None = None
    fmt: str = "png"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SchemaError(f"unknown kind {self.kind!r}; choose one of {KINDS}")
        if self.fmt not in ("png", "svg"):
            raise SchemaError(f"unknown format {self.fmt!r}; choose png or svg")


def _read_csv(path: str, kind: str):
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows or not rows[0]:
        raise SchemaError(f"{path}: empty CSV")
    header = rows[0]
    for col in _REQUIRED[kind]:
        if col not in header:
            raise SchemaError(f"{path}: missing column {col!r} for kind {kind!r}")
    body = rows[1:]
    if not body:
        raise SchemaError(f"{path}: CSV has a header but no data rows")
    return header, body


def _column(header, body, name):
    i = header.index(name)
    return np.array([float(r[i]) for r in body])


def _optional_column(header, body, name):
    """Column that may be absent or contain blank cells (skipped)."""
    if name not in header:
        return None, None
    i = header.index(name)
    xs, ys = [], []
    for j, r in enumerate(body):
        if i < len(r) and r[i].strip():
            xs.append(j)
            ys.append(float(r[i]))
    return np.array(xs, dtype=int), np.array(ys)


def _plot_spectrum(ax, header, body):
    omega = _column(header, body, "omega_meV")
    methods = [c for c in header if c.startswith("S_")]
    if not methods:
        raise SchemaError("spectrum CSV has no S_* method columns")
    for name in methods:
        ax.plot(omega, _column(header, body, name), label=name[2:], linewidth=1.2)
    ax.legend(frameon=False)
    return "$\\omega$ (meV)", "$S(\\omega)$ (arb. units)"


def _plot_sweep(ax, header, body):
    x = _column(header, body, "swept_value")
    for k in (1, 2, 3):
        ax.plot(x, _column(header, body, f"re_w{k}"), label=f"branch {k}", linewidth=1.2)
    for k in (1, 2, 3):
        idx, peaks = _optional_column(header, body, f"peak{k}")
        if peaks is not None and peaks.size:
            ax.plot(x[idx], peaks, ".", markersize=3, color="0.4")
    ax.legend(frameon=False)
    return "swept value", "Re $\\omega_j$ (meV)"


def _plot_evolve(ax, header, body):
    t = _column(header, body, "t_hbar_per_meV")
    for comp in ("a", "A", "B"):
        re = _column(header, body, f"residue_{comp}_re")
        im = _column(header, body, f"residue_{comp}_im")
        ax.plot(t, np.hypot(re, im), label=f"|{comp}|", linewidth=1.2)
    ax.legend(frameon=False)
    return "$t$ ($\\hbar$/meV)", "component magnitude"


_PLOTTERS = {"spectrum": _plot_spectrum, "sweep": _plot_sweep, "evolve": _plot_evolve}


def render(job: PlotJob) -> str:
    """Render the job and return the output path."""
    header, body = _read_csv(job.input_csv, job.kind)
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    try:
        xlabel, ylabel = _PLOTTERS[job.kind](ax, header, body)
        ax.set_xlabel(job.xlabel or xlabel)
        ax.set_ylabel(job.ylabel or ylabel)
        if job.title:
            ax.set_title(job.title)
        fig.tight_layout()
        fig.savefig(
            job.output,
            dpi=150,
            format=job.fmt,
            metadata={"Software": "plotfig"} if job.fmt == "png" else None,
        )
    finally:
        plt.close(fig)
    return job.output


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="plotfig", description=__doc__)
    ap.add_argument("input_csv")
    ap.add_argument("kind", choices=KINDS)
    ap.add_argument("output")
    ap.add_argument("--title", default=None)
    ap.add_argument("--xlabel", default=None)
    ap.add_argument("--ylabel", default=None)
    ap.add_argument("--format", dest="fmt", choices=("png", "svg"), default="png")
    args = ap.parse_args(argv)
    job = PlotJob(
        input_csv=args.input_csv,
        kind=args.kind,
        output=args.output,
        title=args.title,
        xlabel=args.xlabel,
        ylabel=args.ylabel,
        fmt=args.fmt,
    )
    try:
        render(job)
    except (SchemaError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
