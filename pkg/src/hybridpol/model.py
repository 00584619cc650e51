"""Physical parameters, validation and flat key=value config files.

Unit convention: hbar = 1, every frequency, coupling and damping rate in
meV. Couplings are stored linearly (Gamma, not Gamma^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields

import numpy as np

from .errors import ConfigError, InvalidParams


@dataclass(frozen=True)
class ModelParams:
    """Inputs of the three-mode model: a lossy cavity coupled to a Wannier
    and a Frenkel exciton.

    omega_W, omega_F, Omega: bare energies of the Wannier exciton, the
    Frenkel exciton and the cavity mode (meV).
    Gamma13, Gamma23: Wannier-cavity and Frenkel-cavity couplings (meV).
    gamma1, gamma2, gamma3: cavity / Wannier / Frenkel damping rates (meV).
    n_c_bar: mean initial cavity photon number (dimensionless, sets the
    overall spectrum amplitude).
    """

    omega_W: float
    omega_F: float
    Omega: float
    Gamma13: float
    Gamma23: float
    gamma1: float
    gamma2: float
    gamma3: float
    n_c_bar: float = 1.0

    @property
    def dampings(self) -> tuple[float, float, float]:
        return (self.gamma1, self.gamma2, self.gamma3)

    @property
    def supports_quadrature(self) -> bool:
        """Whether the stationary-spectrum integral can converge at all.

        With every damping rate zero the correlation never decays and the
        spectrum integral diverges; such parameter sets are still fine for
        pole and dynamics computations.
        """
        return max(self.dampings) > 0.0


PARAM_FIELDS = tuple(f.name for f in fields(ModelParams))


def validate(params: ModelParams) -> ModelParams:
    """Check every parameter invariant; returns the params unchanged.

    Raises InvalidParams naming the first violated invariant.
    """
    for name in PARAM_FIELDS:
        value = getattr(params, name)
        if not (isinstance(value, (int, float)) and math.isfinite(value)):
            raise InvalidParams(f"non-finite value for {name}: {value!r}")
    for name in ("omega_W", "omega_F", "Omega"):
        if getattr(params, name) <= 0:
            raise InvalidParams(
                f"{name} must be positive, got {getattr(params, name)}"
            )
    for name in ("gamma1", "gamma2", "gamma3"):
        if getattr(params, name) < 0:
            raise InvalidParams(
                f"negative damping rate: {name} = {getattr(params, name)}"
            )
    for name in ("Gamma13", "Gamma23"):
        if getattr(params, name) < 0:
            raise InvalidParams(
                f"negative coupling: {name} = {getattr(params, name)}"
            )
    if params.n_c_bar < 0:
        raise InvalidParams(f"n_c_bar must be >= 0, got {params.n_c_bar}")
    return params


def reference_params() -> ModelParams:
    """Reference parameter set: degenerate Frenkel/cavity at 1562 meV, the
    Wannier line detuned by 1 percent, squared couplings 8 and 16 meV^2.
    """
    omega_F = 1562.0
    return ModelParams(
        omega_W=omega_F * 1.01,
        omega_F=omega_F,
        Omega=omega_F,
        Gamma13=math.sqrt(8.0),
        Gamma23=4.0,
        gamma1=0.1,
        gamma2=0.18,
        gamma3=0.12,
        n_c_bar=1.0,
    )


def params_from_config(path) -> ModelParams:
    """Read ModelParams from a flat `key = value` text file.

    `#` starts a comment, blank lines are ignored, keys are case-sensitive
    and must match the ModelParams field names exactly. Every field must
    appear exactly once. The result is validated.
    """
    try:
        text = open(path, encoding="utf-8").read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc

    values: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, rhs = line.partition("=")
        key = key.strip()
        rhs = rhs.strip()
        if key not in PARAM_FIELDS:
            raise ConfigError(f"line {lineno}: unknown key: {key}")
        if key in values:
            raise ConfigError(f"line {lineno}: duplicate key: {key}")
        try:
            values[key] = float(rhs)
        except ValueError as exc:
            raise ConfigError(
                f"line {lineno}: invalid number for {key}: {rhs!r}"
            ) from exc

    for name in PARAM_FIELDS:
        if name not in values:
            raise ConfigError(f"missing key: {name}")
    return validate(ModelParams(**values))


def write_config(params: ModelParams, path) -> None:
    """Write a config file that params_from_config reads back exactly."""
    lines = [f"{name} = {getattr(params, name)!r}" for name in PARAM_FIELDS]
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


@dataclass(frozen=True)
class SpectralGrid:
    """Uniform frequency grid (meV)."""

    omega_min: float
    omega_max: float
    n_points: int

    def __post_init__(self):
        if self.n_points < 2:
            raise InvalidParams(f"grid needs >= 2 points, got {self.n_points}")
        if not self.omega_min < self.omega_max:
            raise InvalidParams(
                f"grid requires omega_min < omega_max, got "
                f"[{self.omega_min}, {self.omega_max}]"
            )

    @property
    def spacing(self) -> float:
        return (self.omega_max - self.omega_min) / (self.n_points - 1)

    def points(self) -> np.ndarray:
        return np.linspace(self.omega_min, self.omega_max, self.n_points)
