"""Command-line interface: poles, evolve, spectrum, peaks, sweep, validate.

All results are CSV on stdout (or --output), 12 significant digits,
diagnostics on stderr. Exit codes: 0 success, 1 config/validation/usage
errors, 2 numerical failures.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import dynamics, spectrum
from .errors import InputError, NumericalError, UndampedSpectrumError
from .model import SpectralGrid, params_from_config
from .poles import solve_poles
from .sweep import SWEEPABLE, SweepSpec, run_sweep

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NUMERIC = 2

_METHODS = ("closed_form", "lorentz", "quadrature")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="hybridpol", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", required=True, help="key = value parameter file")
        p.add_argument("--output", default=None, help="CSV output path (default: stdout)")
        return p

    add("validate", "check a config file and exit")
    add("poles", "complex eigenfrequencies of the coupled system")

    p = add("evolve", "time evolution of the cavity-operator row")
    p.add_argument("--t-max", type=float, default=20.0, help="final time (hbar/meV)")
    p.add_argument("--n-t", type=int, default=201, help="number of time samples")

    for name in ("spectrum", "peaks"):
        p = add(name, f"stationary emission {name}")
        p.add_argument("--omega-min", type=float, default=None)
        p.add_argument("--omega-max", type=float, default=None)
        p.add_argument("--n-points", type=int, default=4001)
        default_method = "all" if name == "spectrum" else "quadrature"
        p.add_argument(
            "--method",
            choices=_METHODS + ("all",),
            default=default_method,
        )

    p = add("sweep", "1-D parameter sweep: pole branches and peaks")
    p.add_argument("--parameter", required=True, choices=SWEEPABLE)
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--stop", type=float, required=True)
    p.add_argument("--steps", type=int, default=41)
    return parser


def _write_csv(path, header, rows):
    lines = [",".join(header)]
    lines.extend(",".join(row) for row in rows)
    text = "\n".join(lines) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _solve(params):
    return solve_poles(params)


def _grid_for(args, poleset) -> SpectralGrid:
    base = spectrum.default_grid(poleset, n_points=args.n_points)
    return SpectralGrid(
        omega_min=base.omega_min if args.omega_min is None else args.omega_min,
        omega_max=base.omega_max if args.omega_max is None else args.omega_max,
        n_points=args.n_points,
    )


def _spectrum_columns(args, params, poleset, coeffs, grid):
    methods = _METHODS if args.method == "all" else (args.method,)
    columns = {}
    for m in methods:
        if m == "closed_form":
            curve = spectrum.spectrum_closed_form(params, poleset, grid)
            columns["S_closed_form"] = curve.values
        elif m == "lorentz":
            curve = spectrum.spectrum_lorentz_approx(params, poleset, coeffs, grid)
            columns["S_lorentz"] = curve.values
        else:
            curve = spectrum.spectrum_quadrature(params, poleset, coeffs, grid)
            columns["S_quadrature"] = curve.values
    return columns


def _cmd_validate(args) -> int:
    params_from_config(args.config)
    print("config OK", file=sys.stderr)
    return EXIT_OK


def _cmd_poles(args) -> int:
    params = params_from_config(args.config)
    poleset = _solve(params)
    rows = [(_fmt(w.real), _fmt(w.imag)) for w in poleset.poles]
    _write_csv(args.output, ("re_omega", "im_omega"), rows)
    return EXIT_OK


def _cmd_evolve(args) -> int:
    params = params_from_config(args.config)
    if args.t_max <= 0 or args.n_t < 2:
        raise InputError("evolve requires --t-max > 0 and --n-t >= 2")
    poleset = _solve(params)
    coeffs = dynamics.mode_decomposition(params, poleset)
    header = ["t_hbar_per_meV", "t_ps"]
    for source in ("residue", "oracle"):
        for comp in ("a", "A", "B"):
            header += [f"{source}_{comp}_re", f"{source}_{comp}_im"]
    rows = []
    for t in np.linspace(0.0, args.t_max, args.n_t):
        res = dynamics.reconstruct_propagator(coeffs, poleset, float(t))
        orc = dynamics.evolve_oracle(params, float(t)).U[0, :]
        row = [_fmt(t), _fmt(t * dynamics.HBAR_MEV_PS)]
        for z in (*res, *orc):
            row += [_fmt(z.real), _fmt(z.imag)]
        rows.append(row)
    _write_csv(args.output, header, rows)
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    params = params_from_config(args.config)
    poleset = _solve(params)
    coeffs = dynamics.mode_decomposition(params, poleset)
    grid = _grid_for(args, poleset)
    columns = _spectrum_columns(args, params, poleset, coeffs, grid)
    header = ["omega_meV"] + list(columns)
    points = grid.points()
    rows = [
        [_fmt(points[i])] + [_fmt(col[i]) for col in columns.values()]
        for i in range(grid.n_points)
    ]
    _write_csv(args.output, header, rows)
    return EXIT_OK


def _cmd_peaks(args) -> int:
    params = params_from_config(args.config)
    poleset = _solve(params)
    coeffs = dynamics.mode_decomposition(params, poleset)
    grid = _grid_for(args, poleset)
    methods = _METHODS if args.method == "all" else (args.method,)
    rows = []
    for m in methods:
        evaluator = _method_evaluator(m, params, poleset, coeffs)
        peakset = spectrum.find_peaks(evaluator, grid)
        for p in peakset.peaks:
            rows.append([_fmt(p.omega), _fmt(p.height), m])
    _write_csv(args.output, ("omega_peak_meV", "height", "method"), rows)
    return EXIT_OK


def _method_evaluator(method, params, poleset, coeffs):
    """Pointwise spectrum evaluator for peak refinement."""
    if method == "quadrature":
        if min(poleset.decay_rates) <= 0.0:
            raise UndampedSpectrumError(
                "undamped correlation: spectrum integral diverges"
            )
        return lambda w: spectrum.quadrature_values(params, poleset, coeffs, w)
    if method == "closed_form":
        return lambda w: spectrum.closed_form_values(params, poleset, w)
    return lambda w: spectrum.lorentz_values(params, poleset, coeffs, w)


def _cmd_sweep(args) -> int:
    base = params_from_config(args.config)
    spec = SweepSpec(
        parameter=args.parameter,
        start=args.start,
        stop=args.stop,
        n_steps=args.steps,
        base=base,
    )
    result = run_sweep(spec)
    header = ["swept_value"]
    for k in (1, 2, 3):
        header += [f"re_w{k}", f"im_w{k}"]
    header += ["peak1", "peak2", "peak3"]
    rows = []
    for row in result.rows:
        out = [_fmt(row.value)]
        for w in row.poles:
            out += [_fmt(w.real), _fmt(w.imag)]
        peak_omegas = [p.omega for p in row.peaks.peaks][:3]
        out += [_fmt(p) for p in peak_omegas] + [""] * (3 - len(peak_omegas))
        rows.append(out)
    _write_csv(args.output, header, rows)
    return EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "poles": _cmd_poles,
    "evolve": _cmd_evolve,
    "spectrum": _cmd_spectrum,
    "peaks": _cmd_peaks,
    "sweep": _cmd_sweep,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return _COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
