import dataclasses

import pytest

from hybridpol import (
    mode_decomposition,
    reference_params,
    solve_poles,
)


@pytest.fixture
def ref():
    return reference_params()


@pytest.fixture
def ref_poles(ref):
    return solve_poles(ref)


@pytest.fixture
def ref_coeffs(ref, ref_poles):
    return mode_decomposition(ref, ref_poles)


@pytest.fixture
def decoupled(ref):
    return dataclasses.replace(ref, Gamma13=0.0, Gamma23=0.0)
