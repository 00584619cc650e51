"""Time evolution of the damped three-mode system.

The mode (residue) decomposition expresses the cavity operator as

    a(t) = sum_j e^{-i w_j t} (c_a[j] a(0) + c_A[j] A(0) + c_B[j] B(0))

with the sums taken over the three poles. A matrix-exponential propagator
of the raw equations of motion serves as an independent oracle, with a
fixed-step RK4 integrator as a second fallback.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .errors import DegeneratePoleError
from .model import ModelParams
from .poles import PoleSet

# Poles closer than this (relative to the pole magnitude scale) make the
# residue decomposition ill-conditioned; coefficient rounding alone splits a
# true double root by ~sqrt(eps) * scale, so the threshold must scale too.
MIN_POLE_SEPARATION = 1e-6


def _separation_floor(poles: PoleSet) -> float:
    scale = max(1.0, max(abs(w) for w in poles.poles))
    return MIN_POLE_SEPARATION * scale

# hbar in meV*ps: converts times in hbar/meV to picoseconds.
HBAR_MEV_PS = 0.6582119569509067


@dataclass(frozen=True)
class ModeCoefficients:
    """Per-pole complex weights of a(t) in the initial-operator basis."""

    c_a: tuple[complex, complex, complex]
    c_A: tuple[complex, complex, complex]
    c_B: tuple[complex, complex, complex]


@dataclass(frozen=True)
class Propagator:
    """U maps (a(0), A(0), B(0)) to (a(t), A(t), B(t))."""

    t: float
    U: np.ndarray


def system_matrix(params: ModelParams) -> np.ndarray:
    """Generator M of the first-order motion equations d/dt v = M v."""
    return np.array(
        [
            [
                -1j * params.Omega - params.gamma1,
                -1j * params.Gamma13,
                -1j * params.Gamma23,
            ],
            [-1j * params.Gamma13, -1j * params.omega_W - params.gamma2, 0.0],
            [-1j * params.Gamma23, 0.0, -1j * params.omega_F - params.gamma3],
        ],
        dtype=complex,
    )


def mode_decomposition(params: ModelParams, poles: PoleSet) -> ModeCoefficients:
    """Residues of the Fourier-domain solution at each pole.

    c_a[j] = (i g2 + w_j - omega_W)(i g3 + w_j - omega_F) / prod_{k!=j}(w_j - w_k)
    c_A[j] = Gamma13 (i g3 + w_j - omega_F) / prod_{k!=j}(w_j - w_k)
    c_B[j] = Gamma23 (i g2 + w_j - omega_W) / prod_{k!=j}(w_j - w_k)
    """
    if poles.min_separation() <= _separation_floor(poles):
        raise DegeneratePoleError("poles too close for residue decomposition")
    ws = poles.poles
    c_a, c_A, c_B = [], [], []
    for j, wj in enumerate(ws):
        denom = 1.0 + 0j
        for k, wk in enumerate(ws):
            if k != j:
                denom *= wj - wk
        f_w = 1j * params.gamma2 + wj - params.omega_W
        f_f = 1j * params.gamma3 + wj - params.omega_F
        c_a.append(f_w * f_f / denom)
        c_A.append(params.Gamma13 * f_f / denom)
        c_B.append(params.Gamma23 * f_w / denom)
    return ModeCoefficients(c_a=tuple(c_a), c_A=tuple(c_A), c_B=tuple(c_B))


def evolve_oracle(params: ModelParams, t: float) -> Propagator:
    """U(t) = exp(M t), independent of the pole/residue pipeline.

    Eigendecomposition of the 3x3 generator; the fast optical phase makes
    scaling-and-squaring lose ~1e-8 at meV frequencies and t ~ 10, while
    exponentiating eigenvalues keeps full precision. Falls back to
    scaling-and-squaring in a rotating frame if the eigenbasis is
    ill-conditioned (near-degenerate generators).
    """
    if t < 0:
        raise ValueError(f"time must be >= 0, got {t}")
    m = system_matrix(params)
    lam, vec = np.linalg.eig(m)
    if np.linalg.cond(vec) < 1e8:
        u = (vec * np.exp(lam * t)) @ np.linalg.inv(vec)
    else:
        mu = np.mean(np.diag(m))
        u = np.exp(mu * t) * expm((m - mu * np.eye(3)) * t)
    return Propagator(t=t, U=u)


def evolve_rk4(params: ModelParams, t: float, max_step: float = 1e-3) -> Propagator:
    """Fallback oracle: classical fixed-step RK4 on dU/dt = M U.

    Integrates in the frame rotating at the mean diagonal frequency (an
    exact scalar factor); otherwise the ~1500 meV optical phase would
    demand nanoscopic steps for any accuracy.
    """
    if t < 0:
        raise ValueError(f"time must be >= 0, got {t}")
    m = system_matrix(params)
    mu = np.mean(np.diag(m))
    m_rot = m - mu * np.eye(3)
    u = np.eye(3, dtype=complex)
    if t == 0:
        return Propagator(t=0.0, U=u)
    n_steps = max(1, int(np.ceil(t / max_step)))
    h = t / n_steps
    for _ in range(n_steps):
        k1 = m_rot @ u
        k2 = m_rot @ (u + 0.5 * h * k1)
        k3 = m_rot @ (u + 0.5 * h * k2)
        k4 = m_rot @ (u + h * k3)
        u = u + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return Propagator(t=t, U=np.exp(mu * t) * u)


def reconstruct_propagator(
    coeffs: ModeCoefficients, poles: PoleSet, t: float
) -> tuple[complex, complex, complex]:
    """The a-row of the propagator from the residue decomposition."""
    if t < 0:
        raise ValueError(f"time must be >= 0, got {t}")
    phases = [np.exp(-1j * w * t) for w in poles.poles]
    row_a = sum(c * p for c, p in zip(coeffs.c_a, phases))
    row_A = sum(c * p for c, p in zip(coeffs.c_A, phases))
    row_B = sum(c * p for c, p in zip(coeffs.c_B, phases))
    return (complex(row_a), complex(row_A), complex(row_B))
