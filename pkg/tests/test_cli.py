import csv
import io

import pytest

from hybridpol import reference_params, write_config
from hybridpol.cli import main


@pytest.fixture
def ref_cfg(tmp_path):
    path = tmp_path / "ref.cfg"
    write_config(reference_params(), path)
    return str(path)


@pytest.fixture
def decoupled_cfg(tmp_path):
    import dataclasses

    path = tmp_path / "decoupled.cfg"
    write_config(
        dataclasses.replace(reference_params(), Gamma13=0.0, Gamma23=0.0), path
    )
    return str(path)


def run_csv(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    rows = list(csv.reader(io.StringIO(out)))
    return code, rows


def test_validate_ok(ref_cfg, capsys):
    assert main(["validate", "--config", ref_cfg]) == 0
    assert "OK" in capsys.readouterr().err


def test_validate_bad_config(tmp_path, capsys):
    path = tmp_path / "bad.cfg"
    write_config(reference_params(), path)
    text = path.read_text().replace("gamma1 = 0.1", "gamma1 = -0.1")
    path.write_text(text)
    assert main(["validate", "--config", str(path)]) == 1
    assert "gamma1" in capsys.readouterr().err


def test_missing_config_file(capsys):
    assert main(["validate", "--config", "/nonexistent/x.cfg"]) == 1
    assert "error" in capsys.readouterr().err


def test_unknown_flag_exits_1(ref_cfg, capsys):
    assert main(["poles", "--config", ref_cfg, "--frobnicate"]) == 1
    assert "error" in capsys.readouterr().err


def test_unknown_subcommand_exits_1(capsys):
    assert main(["warble"]) == 1


def test_poles_csv(ref_cfg, capsys):
    code, rows = run_csv(capsys, ["poles", "--config", ref_cfg])
    assert code == 0
    assert rows[0] == ["re_omega", "im_omega"]
    assert len(rows) == 4
    for row in rows[1:]:
        re, im = float(row[0]), float(row[1])
        assert 1540.0 <= re <= 1600.0
        assert -0.19 <= im <= -0.10


def test_spectrum_all_methods(ref_cfg, capsys):
    code, rows = run_csv(
        capsys,
        [
            "spectrum",
            "--config",
            ref_cfg,
            "--omega-min",
            "1540",
            "--omega-max",
            "1600",
            "--n-points",
            "501",
        ],
    )
    assert code == 0
    assert rows[0] == ["omega_meV", "S_closed_form", "S_lorentz", "S_quadrature"]
    assert len(rows) == 502
    assert float(rows[1][0]) == 1540.0
    assert float(rows[-1][0]) == 1600.0
    for row in rows[1:]:
        closed, quad = float(row[1]), float(row[3])
        assert abs(closed - quad) <= 1e-8 * max(1.0, abs(quad))


def test_spectrum_single_method(ref_cfg, capsys):
    code, rows = run_csv(
        capsys,
        ["spectrum", "--config", ref_cfg, "--method", "quadrature", "--n-points", "101"],
    )
    assert code == 0
    assert rows[0] == ["omega_meV", "S_quadrature"]
    assert len(rows) == 102


def test_spectrum_output_file_and_determinism(ref_cfg, tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    argv = ["spectrum", "--config", ref_cfg, "--n-points", "201", "--output"]
    assert main(argv + [str(a)]) == 0
    assert main(argv + [str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_peaks_csv(ref_cfg, capsys):
    code, rows = run_csv(capsys, ["peaks", "--config", ref_cfg])
    assert code == 0
    assert rows[0] == ["omega_peak_meV", "height", "method"]
    assert len(rows) == 4  # three peaks, quadrature only
    omegas = [float(r[0]) for r in rows[1:]]
    assert omegas == sorted(omegas)
    assert all(r[2] == "quadrature" for r in rows[1:])


def test_peaks_decoupled_single(decoupled_cfg, capsys):
    code, rows = run_csv(capsys, ["peaks", "--config", decoupled_cfg])
    assert code == 0
    assert len(rows) == 2
    assert float(rows[1][0]) == pytest.approx(1562.0, abs=1e-5)


def test_evolve_csv(ref_cfg, capsys):
    code, rows = run_csv(
        capsys, ["evolve", "--config", ref_cfg, "--t-max", "5", "--n-t", "11"]
    )
    assert code == 0
    header = rows[0]
    assert header[:2] == ["t_hbar_per_meV", "t_ps"]
    assert "residue_a_re" in header and "oracle_B_im" in header
    assert len(rows) == 12
    first = rows[1]
    assert float(first[0]) == 0.0
    i_res = header.index("residue_a_re")
    i_orc = header.index("oracle_a_re")
    assert float(first[i_res]) == pytest.approx(1.0, abs=1e-10)
    for row in rows[1:]:
        for j in range(6):
            assert abs(float(row[2 + j]) - float(row[8 + j])) <= 1e-8


def test_evolve_bad_range(ref_cfg, capsys):
    assert main(["evolve", "--config", ref_cfg, "--t-max", "-1"]) == 1


def test_sweep_csv(ref_cfg, capsys):
    code, rows = run_csv(
        capsys,
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
            "5",
        ],
    )
    assert code == 0
    assert rows[0] == [
        "swept_value",
        "re_w1",
        "im_w1",
        "re_w2",
        "im_w2",
        "re_w3",
        "im_w3",
        "peak1",
        "peak2",
        "peak3",
    ]
    assert len(rows) == 6
    assert float(rows[1][0]) == -0.02
    assert float(rows[-1][0]) == 0.02


def test_exit_2_on_degenerate_poles(tmp_path, capsys):
    import dataclasses

    p = reference_params()
    p = dataclasses.replace(
        p, Gamma13=0.0, Gamma23=0.0, Omega=p.omega_F, gamma1=p.gamma3
    )
    path = tmp_path / "degenerate.cfg"
    write_config(p, path)
    assert main(["evolve", "--config", str(path)]) == 2
    assert "too close" in capsys.readouterr().err


def test_exit_2_on_undamped_spectrum(tmp_path, capsys):
    import dataclasses

    p = reference_params()
    p = dataclasses.replace(p, gamma1=0.0, gamma2=0.0, gamma3=0.0)
    path = tmp_path / "undamped.cfg"
    write_config(p, path)
    assert main(["spectrum", "--config", str(path), "--method", "quadrature"]) == 2
    assert "diverges" in capsys.readouterr().err
