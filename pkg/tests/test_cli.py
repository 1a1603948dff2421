import math

import numpy as np
import pytest

from dgtwolevel.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_spectrum_rows_and_touching_curves(capsys):
    code, out, _ = run_cli(
        capsys,
        "spectrum", "--smoother", "point", "--delta0", "1", "--gamma", "inf",
        "--alpha", "opt", "--cells", "64",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,c_k,lambda_plus,lambda_minus"
    assert len(lines) == 1 + 32
    rows = {int(line.split(",")[0]): line.split(",")[1:] for line in lines[1:]}
    ck, lp, lm = (float(v) for v in rows[16])  # k = J/4
    assert ck == pytest.approx(-1.0, abs=1e-12)
    assert abs(lp - lm) < 1e-10


def test_spectrum_alpha_zero_all_unit(capsys):
    code, out, _ = run_cli(
        capsys,
        "spectrum", "--smoother", "cell", "--delta0", "2", "--gamma", "inf",
        "--alpha", "0", "--cells", "64",
    )
    assert code == 0
    for line in out.strip().splitlines()[1:]:
        _, _, lp, lm = line.split(",")
        assert max(abs(float(lp)), abs(float(lm))) == 1.0


def test_optimize_report_agrees(capsys):
    code, out, _ = run_cli(
        capsys, "optimize", "--smoother", "point", "--delta0", "2", "--gamma", "inf"
    )
    assert code == 0
    report = dict(line.split("=", 1) for line in out.strip().splitlines())
    assert float(report["alpha_opt_formula"]) == pytest.approx(9 / 13, abs=1e-12)
    assert abs(float(report["alpha_opt_formula"]) - float(report["alpha_opt_numeric"])) < 1e-6
    assert report["branch"] == "point"
    assert report["agrees"] == "true"


def test_sweep_deterministic_and_ordered(capsys):
    argv = (
        "sweep", "--smoother", "cell", "--delta0", "1.2,1.5", "--gamma", "inf,1",
        "--alpha", "0.8:0.9:0.05", "--cells", "16", "--bc", "periodic",
    )
    code, out1, _ = run_cli(capsys, *argv)
    assert code == 0
    code, out2, _ = run_cli(capsys, *argv)
    assert out1 == out2  # byte-identical
    lines = out1.strip().splitlines()
    assert lines[0] == "delta0,gamma,alpha,rho_lfa"
    table = [line.split(",") for line in lines[1:]]
    assert len(table) == 2 * 2 * 3
    d0s = [float(r[0]) for r in table]
    assert d0s == sorted(d0s)  # delta0 outermost
    assert "inf" in {r[1] for r in table}
    first_block = [r for r in table if float(r[0]) == 1.2 and r[1] == "inf"]
    assert [float(r[2]) for r in first_block] == sorted(float(r[2]) for r in first_block)


def test_sweep_alpha_curves_have_unique_interior_minimum(capsys):
    code, out, _ = run_cli(
        capsys,
        "sweep", "--smoother", "point", "--delta0", "1.2,1.5,2", "--gamma", "inf",
        "--alpha", "0.5:1.1:0.001", "--cells", "64", "--bc", "periodic",
    )
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    for d0 in ("1.2", "1.5", "2.0"):
        rho = np.array([float(r[3]) for r in rows if float(r[0]) == float(d0)])
        assert len(rho) == 601
        best = int(np.argmin(rho))
        assert 0 < best < len(rho) - 1  # interior minimum
        assert np.all(np.diff(rho[: best + 1]) <= 1e-12)  # decreasing approach
        assert np.all(np.diff(rho[best:]) >= -1e-12)  # increasing departure


def test_sweep_dense_column_matches_lfa(capsys):
    code, out, _ = run_cli(
        capsys,
        "sweep", "--smoother", "point", "--delta0", "2", "--gamma", "2",
        "--alpha", "opt", "--cells", "16", "--bc", "periodic", "--dense",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "delta0,gamma,alpha,rho_lfa,rho_dense"
    _, _, _, rho_lfa, rho_dense = (float(v) for v in lines[1].split(","))
    assert rho_dense == pytest.approx(rho_lfa, abs=1e-9)


def test_sweep_reaction_curve_family(capsys):
    # one optimized point per reaction scaling, the six-curve family
    code, out, _ = run_cli(
        capsys,
        "sweep", "--smoother", "point", "--delta0", "2", "--gamma",
        "16,2,0.5,0.25,0.125,0.0625", "--alpha", "opt", "--cells", "64",
        "--bc", "periodic",
    )
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    assert len(rows) == 6
    gammas = [float(r[1]) for r in rows]
    assert gammas == [16.0, 2.0, 0.5, 0.25, 0.125, 0.0625]
    assert all(0.0 < float(r[3]) < 1.0 for r in rows)
    # small reaction scaling flips the optimum into overrelaxation
    assert float(rows[0][2]) < 1.0 < float(rows[-1][2])


def test_sweep_empty_alpha_grid_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main([
            "sweep", "--smoother", "cell", "--delta0", "2", "--gamma", "inf",
            "--alpha", "",
        ])
    assert exc.value.code == 2


def test_unknown_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_validate_passes(capsys):
    code, out, _ = run_cli(capsys, "validate", "--cells", "16")
    assert code == 0
    assert "checks passed" in out.strip().splitlines()[-1]
    assert "FAIL" not in out


def test_validate_warns_when_quarter_frequency_missing(capsys):
    with pytest.warns(UserWarning, match="multiple of 4"):
        code = main(["validate", "--cells", "6"])
    captured = capsys.readouterr()
    assert code == 0
    assert "quarter_frequency_touch" not in captured.out


def test_crossover_output(capsys):
    code, out, _ = run_cli(capsys, "crossover", "--gamma", "inf")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "delta0_lo,delta0_hi"
    lo, hi = (float(v) for v in lines[1].split(","))
    assert 2.19 <= lo <= 2.19149 <= hi <= 2.20


def test_output_file(tmp_path, capsys):
    path = tmp_path / "spec.csv"
    code, out, _ = run_cli(
        capsys,
        "spectrum", "--smoother", "cell", "--delta0", "2", "--gamma", "1",
        "--alpha", "1", "--cells", "8", "--out", str(path),
    )
    assert code == 0 and out == ""
    content = path.read_text()
    assert content.startswith("k,c_k,lambda_plus,lambda_minus\n")
    assert len(content.strip().splitlines()) == 1 + 4


def test_floats_round_trip(capsys):
    code, out, _ = run_cli(
        capsys,
        "sweep", "--smoother", "point", "--delta0", "2", "--gamma", "inf",
        "--alpha", "opt", "--cells", "16", "--bc", "periodic",
    )
    assert code == 0
    row = out.strip().splitlines()[1].split(",")
    alpha = float(row[2])
    assert repr(alpha) == row[2]  # shortest round-trip representation
    assert alpha == pytest.approx(9 / 13, abs=1e-12)
    assert row[1] == "inf"
    assert math.isinf(float(row[1]))
