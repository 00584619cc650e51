"""Parameter sweeps: anticrossing diagrams and splitting tables."""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import permutations

import numpy as np

from .dynamics import mode_decomposition
from .errors import HybridPolError, InvalidParams
from .model import ModelParams, validate
from .poles import PoleSet, solve_poles
from .spectrum import PeakSet, default_grid, find_peaks, quadrature_values

SWEEPABLE = ("delta", "Gamma13", "Gamma23", "gamma1", "gamma2", "gamma3", "Omega")


@dataclass(frozen=True)
class SweepSpec:
    """A linear 1-D sweep. `delta` sweeps the relative Wannier detuning,
    omega_W = omega_F (1 + delta); every other name is a ModelParams field."""

    parameter: str
    start: float
    stop: float
    n_steps: int
    base: ModelParams

    def __post_init__(self):
        if self.parameter not in SWEEPABLE:
            raise InvalidParams(
                f"unknown sweep parameter {self.parameter!r}; "
                f"choose one of {', '.join(SWEEPABLE)}"
            )
        if self.n_steps < 2:
            raise InvalidParams(f"sweep needs >= 2 steps, got {self.n_steps}")
        if self.start == self.stop:
            raise InvalidParams("sweep requires start != stop")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.n_steps)

    def params_at(self, value: float) -> ModelParams:
        if self.parameter == "delta":
            p = replace(self.base, omega_W=self.base.omega_F * (1.0 + value))
        else:
            p = replace(self.base, **{self.parameter: value})
        return validate(p)


@dataclass(frozen=True)
class SweepRow:
    value: float
    poles: tuple[complex, complex, complex]  # matched branch order
    peaks: PeakSet


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    rows: tuple[SweepRow, ...]


def _match_to_previous(previous, current):
    """Permute `current` to minimize total distance to `previous`, keeping
    branch lines continuous across rows."""
    best, best_cost = None, np.inf
    for perm in permutations(current):
        cost = sum(abs(p - q) for p, q in zip(previous, perm))
        if cost < best_cost:
            best, best_cost = perm, cost
    return best


def run_sweep(spec: SweepSpec, grid_points: int = 4001) -> SweepResult:
    """Solve poles and extract quadrature-spectrum peaks at every step.

    Fail-fast: the first failing step aborts the sweep with the offending
    swept value attached.
    """
    rows: list[SweepRow] = []
    previous = None
    for value in spec.values():
        try:
            params = spec.params_at(float(value))
            poleset = solve_poles(params)
            coeffs = mode_decomposition(params, poleset)
            grid = default_grid(poleset, n_points=grid_points)
            peaks = find_peaks(
                lambda w: quadrature_values(params, poleset, coeffs, w), grid
            )
        except HybridPolError as exc:
            raise type(exc)(
                f"sweep failed at {spec.parameter} = {value}: {exc}"
            ) from exc
        matched = (
            poleset.poles if previous is None else _match_to_previous(previous, poleset.poles)
        )
        previous = matched
        rows.append(SweepRow(value=float(value), poles=matched, peaks=peaks))
    return SweepResult(spec=spec, rows=tuple(rows))
