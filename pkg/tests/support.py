"""Shared helpers for the test suite (importable, unlike conftest)."""

import numpy as np

from hybridpol import ModelParams


def random_params(rng: np.random.Generator) -> ModelParams:
    """Randomized draw over the documented test ranges: frequencies in
    [1, 5000], couplings in [0, 50], dampings in [0, 5]."""
    return ModelParams(
        omega_W=rng.uniform(1.0, 5000.0),
        omega_F=rng.uniform(1.0, 5000.0),
        Omega=rng.uniform(1.0, 5000.0),
        Gamma13=rng.uniform(0.0, 50.0),
        Gamma23=rng.uniform(0.0, 50.0),
        gamma1=rng.uniform(0.0, 5.0),
        gamma2=rng.uniform(0.0, 5.0),
        gamma3=rng.uniform(0.0, 5.0),
        n_c_bar=1.0,
    )
