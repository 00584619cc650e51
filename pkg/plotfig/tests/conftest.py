import subprocess
import sys

import pytest

REFERENCE_CONFIG = """\
# resonant cavity, 1% detuned Wannier exciton
omega_W = 1577.62
omega_F = 1562.0
Omega = 1562.0
Gamma13 = 2.8284271247461903
Gamma23 = 4.0
gamma1 = 0.1
gamma2 = 0.18
gamma3 = 0.12
n_c_bar = 1.0
"""

DECOUPLED_CONFIG = REFERENCE_CONFIG.replace(
    "Gamma13 = 2.8284271247461903", "Gamma13 = 0.0"
).replace("Gamma23 = 4.0", "Gamma23 = 0.0")


def run_cli(args, out_path):
    """Drive the simulator through its public CLI only."""
    cmd = [sys.executable, "-m", "hybridpol", *args, "--output", str(out_path)]
    subprocess.run(cmd, check=True, capture_output=True, text=True)
    return out_path


@pytest.fixture(scope="session")
def ref_cfg(tmp_path_factory):
    path = tmp_path_factory.mktemp("cfg") / "reference.cfg"
    path.write_text(REFERENCE_CONFIG)
    return str(path)


@pytest.fixture(scope="session")
def decoupled_cfg(tmp_path_factory):
    path = tmp_path_factory.mktemp("cfg") / "decoupled.cfg"
    path.write_text(DECOUPLED_CONFIG)
    return str(path)


@pytest.fixture(scope="session")
def spectrum_csv(tmp_path_factory, ref_cfg):
    out = tmp_path_factory.mktemp("csv") / "spectrum.csv"
    return run_cli(
        ["spectrum", "--config", ref_cfg, "--n-points", "2001"], out
    )


@pytest.fixture(scope="session")
def decoupled_spectrum_csv(tmp_path_factory, decoupled_cfg):
    out = tmp_path_factory.mktemp("csv") / "decoupled.csv"
    return run_cli(
        ["spectrum", "--config", decoupled_cfg, "--n-points", "2001"], out
    )


@pytest.fixture(scope="session")
def sweep_csv(tmp_path_factory, ref_cfg):
    out = tmp_path_factory.mktemp("csv") / "sweep.csv"
    return run_cli(
        [
            "sweep",
            "--config",
            ref_cfg,
            "--parameter",
            "delta",
            "--start",
            "-0.02",
            "--stop",
            "0.02",
            "--steps",
            "21",
        ],
        out,
    )


@pytest.fixture(scope="session")
def evolve_csv(tmp_path_factory, ref_cfg):
    out = tmp_path_factory.mktemp("csv") / "evolve.csv"
    return run_cli(
        ["evolve", "--config", ref_cfg, "--t-max", "10", "--n-t", "101"], out
    )
