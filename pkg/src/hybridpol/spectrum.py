"""Stationary emission spectrum of the cavity field and peak extraction.

The two-time correlation for product number-state initial conditions is

    <a+(t) a(0)> = n_c_bar * sum_j conj(c_a[j]) e^{i conj(w_j) t},  t >= 0,

which decays because conj(w_j) = w'_j + i Gamma_j. The spectrum
S(w) = int_0^inf e^{-i w t} <a+(t)a(0)> dt + c.c. is computed three ways:

* quadrature: the exact per-pole antiderivative (with a direct composite
  Gauss-Legendre time integration available as a cross-check),
* closed_form: the equivalent three-term partial-fraction form with
  frequency-dependent numerators,
* lorentz_approx: numerators frozen at the peak positions, giving a smooth
  superposition of three Lorentzian lines.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dynamics import ModeCoefficients, _separation_floor
from .errors import DegeneratePoleError, UndampedSpectrumError
from .model import ModelParams, SpectralGrid
from .poles import PoleSet

METHOD_CLOSED_FORM = "closed_form"
METHOD_LORENTZ = "lorentz_approx"
METHOD_QUADRATURE = "quadrature"

_GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class SpectrumCurve:
    grid: SpectralGrid
    values: np.ndarray
    method: str


@dataclass(frozen=True)
class Peak:
    omega: float
    height: float


@dataclass(frozen=True)
class PeakSet:
    """Strict local maxima of a spectrum, ascending, with consecutive
    inter-peak splittings."""

    peaks: tuple[Peak, ...]
    splittings: tuple[float, ...]


def correlation_weights(coeffs: ModeCoefficients) -> tuple[complex, complex, complex]:
    """Per-pole weights of <a+(t)a(0)>/n_c_bar; they sum to 1."""
    return tuple(np.conj(c) for c in coeffs.c_a)


def correlation(
    params: ModelParams, poles: PoleSet, coeffs: ModeCoefficients, t
) -> complex:
    """Two-time correlation <a+(t)a(0)> for t >= 0 (scalar or array t)."""
    t = np.asarray(t)
    if np.any(t < 0):
        raise ValueError("correlation is defined for t >= 0")
    ws = correlation_weights(coeffs)
    total = sum(
        w * np.exp(1j * np.conj(p) * t) for w, p in zip(ws, poles.poles)
    )
    out = params.n_c_bar * total
    return complex(out) if out.ndim == 0 else out


def _require_damped(poles: PoleSet) -> None:
    if min(poles.decay_rates) <= 0.0:
        raise UndampedSpectrumError(
            "undamped correlation: spectrum integral diverges"
        )


def _require_distinct(poles: PoleSet) -> None:
    if poles.min_separation() <= _separation_floor(poles):
        raise DegeneratePoleError("poles too close for spectrum evaluation")


def quadrature_values(
    params: ModelParams, poles: PoleSet, coeffs: ModeCoefficients, omega
) -> np.ndarray:
    """Exact per-pole antiderivative of the spectrum integral:

        S(w) = 2 Re sum_j n_c_bar w_j / (Gamma_j + i (w - w'_j))
    """
    omega = np.asarray(omega, dtype=float)
    weights = correlation_weights(coeffs)
    total = np.zeros(omega.shape, dtype=complex)
    for w, pole in zip(weights, poles.poles):
        total += w / (-pole.imag + 1j * (omega - pole.real))
    return 2.0 * params.n_c_bar * np.real(total)


def spectrum_quadrature(
    params: ModelParams,
    poles: PoleSet,
    coeffs: ModeCoefficients,
    grid: SpectralGrid,
) -> SpectrumCurve:
    _require_damped(poles)
    return SpectrumCurve(
        grid=grid,
        values=quadrature_values(params, poles, coeffs, grid.points()),
        method=METHOD_QUADRATURE,
    )


def spectrum_quadrature_numeric(
    params: ModelParams,
    poles: PoleSet,
    coeffs: ModeCoefficients,
    grid: SpectralGrid,
    tail: float = 1e-13,
    nodes_per_period: int = 40,
) -> SpectrumCurve:
    """Direct composite Gauss-Legendre integration of
    2 Re int_0^T e^{-iwt} <a+(t)a(0)> dt, truncated where the correlation
    envelope has decayed below `tail`.

    Slower than the antiderivative; exists as its independent cross-check.
    """
    _require_damped(poles)
    omega = grid.points()
    min_rate = min(poles.decay_rates)
    horizon = -np.log(tail) / min_rate

    detunings = np.abs(omega[:, None] - np.array(poles.real_parts)[None, :])
    max_freq = max(float(detunings.max()), max(poles.decay_rates), 1e-12)
    period = 2.0 * np.pi / max_freq
    panel_width = period * 10.0 / nodes_per_period  # 10-node panels
    n_panels = int(np.ceil(horizon / panel_width))

    gl_x, gl_w = np.polynomial.legendre.leggauss(10)
    edges = np.linspace(0.0, horizon, n_panels + 1)
    half = np.diff(edges) / 2.0
    mid = (edges[:-1] + edges[1:]) / 2.0
    nodes = (mid[:, None] + half[:, None] * gl_x[None, :]).ravel()
    wts = (half[:, None] * gl_w[None, :]).ravel()

    corr = correlation(params, poles, coeffs, nodes) * wts
    values = np.empty(omega.shape)
    chunk = max(1, int(4e6) // nodes.size)
    for start in range(0, omega.size, chunk):
        sl = slice(start, start + chunk)
        phases = np.exp(-1j * np.outer(omega[sl], nodes))
        values[sl] = 2.0 * np.real(phases @ corr)
    return SpectrumCurve(grid=grid, values=values, method=METHOD_QUADRATURE)


def _pole_numerator_weights(params: ModelParams, poles: PoleSet):
    """conj(E(w_j)) / conj(prod_{k!=j}(w_j - w_k)) for each pole, where
    E(w) = (i g2 + w - omega_W)(i g3 + w - omega_F)."""
    ws = poles.poles
    out = []
    for j, wj in enumerate(ws):
        denom = 1.0 + 0j
        for k, wk in enumerate(ws):
            if k != j:
                denom *= wj - wk
        e_val = (1j * params.gamma2 + wj - params.omega_W) * (
            1j * params.gamma3 + wj - params.omega_F
        )
        out.append(np.conj(e_val) / np.conj(denom))
    return out


def closed_form_values(params: ModelParams, poles: PoleSet, omega) -> np.ndarray:
    """Three-Lorentzian-denominator form with frequency-dependent
    numerators A(w), B(w), C(w):

        S(w) = sum_j A_j(w) / ((w - w'_j)^2 + Gamma_j^2),
        A_j(w) = 2 n_c_bar Re[-i conj(E(w_j)) D_j (w - w_j)] / |D_j|^2

    with D_j = prod_{k!=j}(w_j - w_k). The conjugation and -i follow the
    same decaying-correlation convention used throughout; see the module
    docstring.
    """
    omega = np.asarray(omega, dtype=float)
    values = np.zeros(omega.shape)
    for u, pole in zip(_pole_numerator_weights(params, poles), poles.poles):
        numerator = 2.0 * params.n_c_bar * np.real(-1j * u * (omega - pole))
        values += numerator / ((omega - pole.real) ** 2 + pole.imag**2)
    return values


def spectrum_closed_form(
    params: ModelParams, poles: PoleSet, grid: SpectralGrid
) -> SpectrumCurve:
    _require_distinct(poles)
    return SpectrumCurve(
        grid=grid,
        values=closed_form_values(params, poles, grid.points()),
        method=METHOD_CLOSED_FORM,
    )


def lorentz_values(
    params: ModelParams, poles: PoleSet, coeffs: ModeCoefficients, omega
) -> np.ndarray:
    """Constant-numerator approximation: each numerator frozen at its own
    peak, A_j <- A_j(w'_j) = 2 n_c_bar Gamma_j Re conj(c_a[j]), a smooth
    superposition of three Lorentzian lines."""
    omega = np.asarray(omega, dtype=float)
    weights = correlation_weights(coeffs)
    values = np.zeros(omega.shape)
    for w, pole in zip(weights, poles.poles):
        rate = -pole.imag
        amp = 2.0 * params.n_c_bar * rate * np.real(w)
        values += amp / ((omega - pole.real) ** 2 + rate**2)
    return values


def spectrum_lorentz_approx(
    params: ModelParams,
    poles: PoleSet,
    coeffs: ModeCoefficients,
    grid: SpectralGrid,
) -> SpectrumCurve:
    _require_distinct(poles)
    return SpectrumCurve(
        grid=grid,
        values=lorentz_values(params, poles, coeffs, grid.points()),
        method=METHOD_LORENTZ,
    )


def default_grid(poles: PoleSet, n_points: int = 4001) -> SpectralGrid:
    """Grid spanning the pole real parts plus 20 maximal linewidths."""
    margin = 20.0 * max(poles.decay_rates)
    margin = max(margin, 1e-6)
    return SpectralGrid(
        omega_min=min(poles.real_parts) - margin,
        omega_max=max(poles.real_parts) + margin,
        n_points=n_points,
    )


def _golden_section_max(f, lo: float, hi: float, tol: float = 1e-6) -> float:
    a, b = lo, hi
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = f(x1)
    return 0.5 * (a + b)


def find_peaks(curve_evaluator, grid: SpectralGrid) -> PeakSet:
    """Locate strict local maxima of the evaluated curve on the grid.

    Scans for sign changes of the central finite-difference derivative and
    refines each bracketed maximum by golden-section search to 1e-6 meV.
    The evaluator must accept a float or a float array. An empty PeakSet
    signals no maximum on the grid (usually a grid-range problem).
    """
    x = grid.points()
    values = np.asarray(curve_evaluator(x), dtype=float)
    if not np.all(np.isfinite(values)):
        raise ValueError("curve evaluator produced non-finite values on grid")
    deriv = np.empty_like(values)
    deriv[1:-1] = (values[2:] - values[:-2]) / (2.0 * grid.spacing)
    deriv[0] = values[1] - values[0]
    deriv[-1] = values[-1] - values[-2]

    def scalar(w: float) -> float:
        return float(np.asarray(curve_evaluator(np.array([w])))[0])

    peaks: list[Peak] = []
    for i in range(len(x) - 1):
        if deriv[i] > 0.0 and deriv[i + 1] <= 0.0:
            lo = x[max(i - 1, 0)]
            hi = x[min(i + 2, len(x) - 1)]
            w_peak = _golden_section_max(scalar, lo, hi)
            h = scalar(w_peak)
            # strictness guard against plateau artifacts
            eps = max(grid.spacing * 1e-3, 1e-9)
            if h > scalar(w_peak - eps) or h > scalar(w_peak + eps):
                peaks.append(Peak(omega=w_peak, height=h))

    peaks.sort(key=lambda p: p.omega)
    merged: list[Peak] = []
    for p in peaks:
        if merged and abs(p.omega - merged[-1].omega) <= 2e-6:
            if p.height > merged[-1].height:
                merged[-1] = p
        else:
            merged.append(p)
    splittings = tuple(
        merged[i + 1].omega - merged[i].omega for i in range(len(merged) - 1)
    )
    return PeakSet(peaks=tuple(merged), splittings=splittings)
