"""Characteristic cubic of the damped three-mode system and its roots.

The complex eigenfrequencies omega_j = omega'_j - i*Gamma_j solve

    (i g1 + w - Omega)(i g2 + w - omega_W)(i g3 + w - omega_F)
        - (i g2 + w - omega_W) Gamma23^2 - (i g3 + w - omega_F) Gamma13^2 = 0

Two independent solvers are provided: closed-form (Cardano, complex
arithmetic throughout) and iterative simultaneous roots (Durand-Kerner).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import ConvergenceError
from .model import ModelParams

# Real parts closer than this are ordering ties, broken by ascending decay
# rate so the output labeling is deterministic.
TIE_TOL = 1e-9

_DK_MAX_ITER = 500
_DK_REL_TOL = 1e-12


@dataclass(frozen=True)
class CubicCoefficients:
    """Monic cubic P(w) = w^3 + c2 w^2 + c1 w + c0 with complex coefficients."""

    c2: complex
    c1: complex
    c0: complex

    def eval(self, w: complex) -> complex:
        return ((w + self.c2) * w + self.c1) * w + self.c0

    def eval_deriv(self, w: complex) -> complex:
        return (3.0 * w + 2.0 * self.c2) * w + self.c1

    @property
    def scale(self) -> float:
        return max(1.0, abs(self.c0))

    def depressed(self) -> tuple[complex, complex, complex]:
        """(shift, p, q) with P(t + shift) = t^3 + p t + q, shift = -c2/3.

        Root finding happens in the shifted variable: near a root the raw
        cubic is evaluated as a difference of terms of order |c0|, so its
        value is cancellation noise, while the depressed cubic's terms are
        of the order of the root separations.
        """
        shift = -self.c2 / 3.0
        p = self.c1 - self.c2 * self.c2 / 3.0
        q = self.eval(shift)
        return shift, p, q


@dataclass(frozen=True)
class PoleSet:
    """The three complex eigenfrequencies, sorted ascending by real part
    (ties broken by ascending decay rate -imag)."""

    poles: tuple[complex, complex, complex]

    @property
    def splittings(self) -> tuple[complex, complex, complex]:
        """(w1-w2, w1-w3, w2-w3) in the sorted labeling."""
        w1, w2, w3 = self.poles
        return (w1 - w2, w1 - w3, w2 - w3)

    @property
    def real_parts(self) -> tuple[float, float, float]:
        return tuple(w.real for w in self.poles)

    @property
    def decay_rates(self) -> tuple[float, float, float]:
        return tuple(-w.imag for w in self.poles)

    def min_separation(self) -> float:
        return min(abs(d) for d in self.splittings)


def bare_complex_frequencies(params: ModelParams) -> tuple[complex, complex, complex]:
    """(Omega - i g1, omega_W - i g2, omega_F - i g3)."""
    return (
        params.Omega - 1j * params.gamma1,
        params.omega_W - 1j * params.gamma2,
        params.omega_F - 1j * params.gamma3,
    )


def build_pole_cubic(params: ModelParams) -> CubicCoefficients:
    """Expand the characteristic equation into monic-cubic coefficients."""
    z1, z2, z3 = bare_complex_frequencies(params)
    g13sq = params.Gamma13 * params.Gamma13
    g23sq = params.Gamma23 * params.Gamma23
    c2 = -(z1 + z2 + z3)
    c1 = z1 * z2 + z1 * z3 + z2 * z3 - g13sq - g23sq
    c0 = -z1 * z2 * z3 + g23sq * z2 + g13sq * z3
    return CubicCoefficients(c2=c2, c1=c1, c0=c0)


def characteristic_lhs(params: ModelParams, w: complex) -> complex:
    """Direct, unexpanded evaluation of the characteristic equation.

    Independent of build_pole_cubic; used to cross-check the expansion.
    """
    f1 = 1j * params.gamma1 + w - params.Omega
    f2 = 1j * params.gamma2 + w - params.omega_W
    f3 = 1j * params.gamma3 + w - params.omega_F
    return (
        f1 * f2 * f3
        - f2 * params.Gamma23 * params.Gamma23
        - f3 * params.Gamma13 * params.Gamma13
    )


def _sort_roots(roots) -> tuple[complex, complex, complex]:
    ordered = sorted(roots, key=lambda w: w.real)
    # break near-ties in the real part by ascending decay rate
    out = list(ordered)
    i = 0
    while i < len(out):
        j = i + 1
        while j < len(out) and abs(out[j].real - out[i].real) <= TIE_TOL:
            j += 1
        out[i:j] = sorted(out[i:j], key=lambda w: -w.imag)
        i = j
    return tuple(out)


def _depressed_eval(p: complex, q: complex, t: complex) -> complex:
    return (t * t + p) * t + q


def _newton_polish(p: complex, q: complex, t: complex, steps: int = 2) -> complex:
    for _ in range(steps):
        dp = 3.0 * t * t + p
        if dp == 0:
            break
        step = _depressed_eval(p, q, t) / dp
        if not cmath.isfinite(step):
            break
        t = t - step
    return t


def solve_cubic_analytic(coeffs: CubicCoefficients) -> PoleSet:
    """Closed-form roots via the depressed cubic.

    Principal complex cube root, remaining roots by multiplication with
    the unit cube roots; two Newton steps on the depressed cubic clean up
    residual rounding before the shift back.
    """
    shift, p, q = coeffs.depressed()

    s = cmath.sqrt(q * q / 4.0 + p * p * p / 27.0)
    u3 = -q / 2.0 + s
    if abs(u3) < 1e-3 * abs(q / 2.0):
        u3 = -q / 2.0 - s  # avoid the cancelling branch

    if u3 == 0:
        # both branches vanish only for p = q = 0: a triple root
        ts = [0.0 + 0j] * 3
    else:
        u = u3 ** (1.0 / 3.0)
        zeta = complex(-0.5, 3.0**0.5 / 2.0)
        ts = []
        for k in range(3):
            uk = u * zeta**k
            ts.append(uk - p / (3.0 * uk))

    roots = [_newton_polish(p, q, t) + shift for t in ts]
    return PoleSet(poles=_sort_roots(roots))


def solve_cubic_numeric(coeffs: CubicCoefficients) -> PoleSet:
    """Durand-Kerner simultaneous iteration on the depressed cubic.

    Starts from three distinct points on a circle of radius 1 + max|c_k|
    of the iterated (depressed) cubic, a root bound, and stops when the
    largest relative update drops below 1e-12.
    """
    shift, p, q = coeffs.depressed()
    radius = 1.0 + max(abs(p), abs(q))
    # unequal radii + phase offset break any accidental symmetry with roots
    ts = [
        radius * (1.0 + 0.05 * k) * cmath.exp(1j * (2.0 * cmath.pi * k / 3.0 + 0.7))
        for k in range(3)
    ]

    for _ in range(_DK_MAX_ITER):
        max_update = 0.0
        new = list(ts)
        for k in range(3):
            denom = 1.0 + 0j
            for j in range(3):
                if j != k:
                    denom *= ts[k] - ts[j]
            if denom == 0:
                denom = 1e-300
            step = _depressed_eval(p, q, ts[k]) / denom
            new[k] = ts[k] - step
            max_update = max(max_update, abs(step) / max(1.0, abs(new[k])))
        ts = new
        if max_update < _DK_REL_TOL:
            return PoleSet(poles=_sort_roots([t + shift for t in ts]))

    best = tuple(t + shift for t in ts)
    residual = max(abs(_depressed_eval(p, q, t)) for t in ts)
    raise ConvergenceError(
        f"simultaneous root iteration did not converge in {_DK_MAX_ITER} "
        f"iterations (residual {residual:.3e})",
        best=best,
        residual=residual,
    )


def characteristic_deriv(params: ModelParams, w: complex) -> complex:
    f1 = 1j * params.gamma1 + w - params.Omega
    f2 = 1j * params.gamma2 + w - params.omega_W
    f3 = 1j * params.gamma3 + w - params.omega_F
    return (
        f1 * f2 + f1 * f3 + f2 * f3
        - params.Gamma23 * params.Gamma23
        - params.Gamma13 * params.Gamma13
    )


def refine_poles(params: ModelParams, poles: PoleSet, steps: int = 3) -> PoleSet:
    """Newton-polish roots against the unexpanded characteristic function.

    Expanding to monic coefficients rounds at the scale of |c0| (~1e9 meV^3
    for meV-scale inputs), which near close root pairs costs ~1e-6 meV of
    root accuracy. The product form evaluates near a root at the scale of
    the root separations, so a few Newton steps on it recover the roots of
    the actual parameter set to near machine precision.
    """
    polished = []
    for w in poles.poles:
        for _ in range(steps):
            dp = characteristic_deriv(params, w)
            if dp == 0:
                break
            step = characteristic_lhs(params, w) / dp
            if not cmath.isfinite(step):
                break
            w = w - step
        polished.append(w)
    refined = PoleSet(poles=_sort_roots(polished))
    # polishing must not collapse distinct roots onto one Newton basin
    if refined.min_separation() < 0.5 * poles.min_separation() - 1e-12:
        return poles
    return refined


def solve_poles(params: ModelParams) -> PoleSet:
    """Build the cubic, solve it analytically, polish on the product form."""
    return refine_poles(params, solve_cubic_analytic(build_pole_cubic(params)))
