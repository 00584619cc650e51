"""Poles, damped dynamics and stationary emission spectra of a lossy
cavity mode coupled to a Wannier and a Frenkel exciton."""

from .dynamics import (
    HBAR_MEV_PS,
    ModeCoefficients,
    Propagator,
    evolve_oracle,
    evolve_rk4,
    mode_decomposition,
    reconstruct_propagator,
    system_matrix,
)
from .errors import (
    ConfigError,
    ConvergenceError,
    DegeneratePoleError,
    HybridPolError,
    InputError,
    InvalidParams,
    NumericalError,
    UndampedSpectrumError,
)
from .model import (
    ModelParams,
    SpectralGrid,
    reference_params,
    params_from_config,
    validate,
    write_config,
)
from .poles import (
    CubicCoefficients,
    PoleSet,
    build_pole_cubic,
    characteristic_lhs,
    solve_cubic_analytic,
    solve_cubic_numeric,
    solve_poles,
)
from .spectrum import (
    Peak,
    PeakSet,
    SpectrumCurve,
    closed_form_values,
    correlation,
    correlation_weights,
    default_grid,
    find_peaks,
    lorentz_values,
    quadrature_values,
    spectrum_closed_form,
    spectrum_lorentz_approx,
    spectrum_quadrature,
    spectrum_quadrature_numeric,
)
from .sweep import SweepResult, SweepRow, SweepSpec, run_sweep

__version__ = "0.1.0"
