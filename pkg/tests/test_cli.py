"""Command-line interface: exit codes, CSV schemas, config merging."""

import json
import math

import numpy as np
import pytest

from tonguelab import TongueSample, fit_contact, guide_series
from tonguelab.cli import run


def _rows(out):
    lines = out.strip().split("\n")
    header = lines[0].split(",")
    return header, [line.split(",") for line in lines[1:]]


def test_trans_csv(capsys):
    assert run(["trans", "--t", "0.3", "--a", "0.1", "--n", "2000"]) == 0
    header, rows = _rows(capsys.readouterr().out)
    assert header == ["lo", "hi", "estimate", "iterations"]
    lo, hi, est = map(float, rows[0][:3])
    assert rows[0][3] == "2000"
    assert lo <= est <= hi
    assert hi - lo == pytest.approx(2.0 / 2000, rel=1e-9)


def test_exit_code_usage_errors(capsys):
    assert run(["no-such-command"]) == 2
    assert run(["trans", "--a", "0.1"]) == 2
    assert "missing required option --t" in capsys.readouterr().err
    assert run(["--help"]) == 0


def test_exit_code_domain_errors(capsys):
    # coupling outside the monotone range
    assert run(["trans", "--t", "0.3", "--a", "0.5"]) == 3
    assert "ParameterOutOfRange" in capsys.readouterr().err
    # tongue label not in lowest terms
    assert run(["boundary", "--p", "2", "--q", "4", "--a", "0.05"]) == 3
    assert "NonCoprime" in capsys.readouterr().err


def test_boundary_closed_form(capsys):
    assert run(["boundary", "--p", "0", "--q", "1", "--a", "0.1"]) == 0
    header, rows = _rows(capsys.readouterr().out)
    assert header == ["p", "q", "a", "t_left", "t_right", "x_left", "x_right",
                      "width"]
    row = rows[0]
    assert float(row[3]) == pytest.approx(-0.1, abs=1e-12)
    assert float(row[4]) == pytest.approx(0.1, abs=1e-12)
    assert float(row[7]) == pytest.approx(0.2, abs=1e-12)


def test_out_file_matches_stdout(tmp_path, capsys):
    path = tmp_path / "enc.csv"
    assert run(["trans", "--t", "0.3", "--a", "0.1", "--n", "1000",
                "--out", str(path)]) == 0
    assert capsys.readouterr().out == ""
    assert run(["trans", "--t", "0.3", "--a", "0.1", "--n", "1000"]) == 0
    assert path.read_text() == capsys.readouterr().out


def test_config_merge_and_flag_override(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"t": 0.3, "a": 0.05, "n": 500}))
    assert run(["trans", "--config", str(cfg), "--t", "0.4"]) == 0
    merged = capsys.readouterr().out
    assert run(["trans", "--t", "0.4", "--a", "0.05", "--n", "500"]) == 0
    assert merged == capsys.readouterr().out


def test_trace_width_fit_round_trip(tmp_path, capsys):
    trace_csv = tmp_path / "trace.csv"
    assert run(["trace", "--p", "1", "--q", "2",
                "--a-values", "0.01,0.02,0.04,0.08",
                "--out", str(trace_csv)]) == 0
    assert run(["width-fit", "--input", str(trace_csv)]) == 0
    header, rows = _rows(capsys.readouterr().out)
    assert header == ["exponent", "coefficient", "residual", "samples_used"]
    # same fit in process, built from the identical parsed CSV values
    samples = []
    for line in trace_csv.read_text().strip().split("\n")[1:]:
        a, t_left, t_right, width = map(float, line.split(","))
        samples.append(TongueSample(p=0, q=1, a=a, t_left=t_left,
                                    t_right=t_right, x_left=math.nan,
                                    x_right=math.nan, width=width))
    fit = fit_contact(samples)
    assert float(rows[0][0]) == fit.exponent  # %.17g round-trips doubles
    assert float(rows[0][1]) == fit.coefficient
    assert int(rows[0][3]) == fit.samples_used
    assert fit.exponent == pytest.approx(2.0, abs=0.05)


def test_width_fit_csv_out(tmp_path, capsys):
    trace_csv = tmp_path / "trace.csv"
    trace_csv.write_text("a,width\n" + "".join(
        f"{a},{3.0 * a * a}\n" for a in (0.01, 0.02, 0.04, 0.08)))
    log_csv = tmp_path / "log.csv"
    assert run(["width-fit", "--input", str(trace_csv),
                "--csv-out", str(log_csv)]) == 0
    header, rows = _rows(log_csv.read_text())
    assert header == ["a", "width", "log_a", "log_width"]
    assert len(rows) == 4
    assert float(rows[0][2]) == pytest.approx(math.log(0.01), rel=1e-12)


def test_series_blaschke_coefficients(capsys):
    assert run(["series", "--guide", "blaschke", "--p", "1", "--q", "3",
                "--order", "4"]) == 0
    header, rows = _rows(capsys.readouterr().out)
    assert header == ["k", "re", "im"]
    assert len(rows) == 5
    got = np.array([[float(r[1]), float(r[2])] for r in rows])
    lam = np.exp(2j * np.pi / 3)
    want = guide_series("blaschke", 1, 3, 4).coeffs
    assert np.allclose(got[:, 0] + 1j * got[:, 1], want, atol=1e-15)
    assert got[1, 0] == pytest.approx(lam.real, abs=1e-15)
    assert got[2, 1] == pytest.approx(-lam.imag, abs=1e-15)


def test_parabolic_row(capsys):
    assert run(["parabolic", "--guide", "blaschke", "--p", "1", "--q", "2"]) == 0
    header, rows = _rows(capsys.readouterr().out)
    assert header == ["p", "q", "multiplier_re", "multiplier_im", "nu", "C_re",
                      "C_im", "leading_index", "width_coefficient"]
    row = rows[0]
    assert row[0] == "1" and row[1] == "2" and row[4] == "1"
    assert float(row[5]) == pytest.approx(-2.0, abs=1e-10)
    assert float(row[8]) == pytest.approx(2.0 / math.pi, rel=1e-12)


def test_degree_check_verdict_lines(capsys):
    assert run(["degree-check", "--n", "1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("k,|c_k|\n")
    assert "# degree_bound_satisfied=true" in out
    assert run(["degree-check", "--family", "angle", "--n", "1"]) == 0
    tail = capsys.readouterr().out.strip().split("\n")[-1]
    assert tail.startswith("# degree_bound_satisfied=false worst_k=2 ")


def test_render_writes_both_formats(tmp_path):
    pbm = tmp_path / "mask.pbm"
    assert run(["render", "--mode", "tonguemask", "--t-lo", "0", "--t-hi", "1",
                "--a-lo", "-0.1", "--a-hi", "0.1", "--width", "32",
                "--height", "16", "--n", "2000", "--tongues", "0/1,1/2",
                "--out", str(pbm)]) == 0
    assert pbm.read_bytes().startswith(b"P4\n# tonguemask")
    pgm = tmp_path / "stair.pgm"
    assert run(["render", "--mode", "transgray", "--t-lo", "0", "--t-hi", "1",
                "--a-lo", "-0.1", "--a-hi", "0.1", "--width", "16",
                "--height", "8", "--n", "500", "--out", str(pgm)]) == 0
    assert pgm.read_bytes().startswith(b"P5\n# transgray")


def test_render_requires_out(capsys):
    assert run(["render", "--mode", "transgray", "--t-lo", "0", "--t-hi", "1",
                "--a-lo", "-0.1", "--a-hi", "0.1"]) == 2
    assert "missing required option --out" in capsys.readouterr().err


def test_profile_csv(capsys):
    assert run(["profile", "--t", "0.3", "--a", "0.05", "--big-n", "50",
                "--grid", "32"]) == 0
    header, rows = _rows(capsys.readouterr().out)
    assert header == ["x", "phi"]
    assert len(rows) == 33
    assert float(rows[0][0]) == 0.0 and float(rows[0][1]) == 0.0
    assert float(rows[-1][0]) == 1.0 and float(rows[-1][1]) == 1.0


def test_fourier_family_flag(capsys):
    # one-sided coefficient -i/2 at k=1 is the standard family
    assert run(["trans", "--family", "fourier",
                "--fourier", "[[1, 0, -0.5]]", "--t", "0.3", "--a", "0.1",
                "--n", "1000"]) == 0
    fou = capsys.readouterr().out
    assert run(["trans", "--t", "0.3", "--a", "0.1", "--n", "1000"]) == 0
    assert fou == capsys.readouterr().out
