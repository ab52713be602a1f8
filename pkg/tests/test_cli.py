"""Command-line surface: routes, exit codes, report determinism."""

from __future__ import annotations

import json

import mpmath as mp

from partizeta.cli import main

PREC_ARGS = ["--prec", "192"]


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_pzeta_all_routes_pi_half(capsys):
    code, out = run_cli(capsys, *PREC_ARGS, "pzeta", "--spec", "2N", "--s", "2",
                        "--routes", "all")
    assert code == 0
    data = json.loads(out)
    routes = {r["route"] for r in data["results"]}
    assert routes == {"product", "gamma", "logseries"}
    with mp.workprec(220):
        for rec in data["results"]:
            assert abs(mp.mpf(rec["value_re"]) - mp.pi / 2) < mp.mpf("1e-35")
        for dev in data["pairwise_deviation"].values():
            assert mp.mpf(dev) < mp.mpf("1e-35")


def test_pzeta_geq2_ramanujan(capsys):
    code, out = run_cli(capsys, *PREC_ARGS, "pzeta", "--spec", "geq:2", "--s", "3")
    assert code == 0
    data = json.loads(out)
    assert [r["route"] for r in data["results"]] == ["product"]
    with mp.workprec(220):
        want = 3 * mp.pi / mp.cosh(mp.pi * mp.sqrt(3) / 2)
        assert abs(mp.mpf(data["results"][0]["value_re"]) - want) < mp.mpf("1e-30")


def test_pzeta_grid_scan_reports_poles(capsys):
    code, out = run_cli(capsys, *PREC_ARGS, "pzeta", "--spec", "2N",
                        "--s", "0.2,0.21,0.25,0.4,0.5,1,2", "--routes", "logseries")
    assert code == 0
    data = json.loads(out)
    poles = {r["s"]: r["pole_at_k"] for r in data["results"] if "pole_at_k" in r}
    assert poles == {"0.2": 5, "0.25": 4, "0.5": 2, "1.0": 1}
    finite = [r for r in data["results"] if "value_re" in r]
    assert len(finite) == 3  # 0.21, 0.4, 2


def test_pzeta_divergent_spec_exit_2(capsys):
    code = main([*PREC_ARGS, "pzeta", "--spec", "0+1N", "--s", "2"])
    assert code == 2


def test_pzeta_bad_grammar_exit_2(capsys):
    code = main([*PREC_ARGS, "pzeta", "--spec", "wat:7", "--s", "2"])
    assert code == 2


def test_fixedlen_exact_rendering(capsys):
    code, out = run_cli(capsys, *PREC_ARGS, "fixedlen", "--m", "2", "--k", "3", "--exact")
    assert code == 0
    data = json.loads(out)
    assert data["exact_rational"] == "31/15120"
    assert data["pi_power"] == 6
    assert data["rendered"] == "31/15120 * pi^6"


def test_mzv_equal_args_exact(capsys):
    code, out = run_cli(capsys, *PREC_ARGS, "mzv", "--equal-args", "2", "2", "--exact")
    assert code == 0
    data = json.loads(out)
    assert data["exact_rational"] == "1/120"
    assert data["pi_power"] == 4


def test_mzv_bruteforce_index(capsys):
    code, out = run_cli(capsys, *PREC_ARGS, "mzv", "--index", "4,2", "--bound", "500")
    assert code == 0
    data = json.loads(out)
    assert data["route"] == "bruteforce"


def test_mzv_requires_index_or_equal_args(capsys):
    assert main([*PREC_ARGS, "mzv"]) == 2


def test_padic_kummer_instance(capsys):
    code, out = run_cli(capsys, *PREC_ARGS, "padic", "--p", "5", "--a", "1",
                        "--k", "1", "--m1", "2", "--m2", "22")
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True
    assert data["required"] == 2
    assert data["valuation_observed"] >= 2


def test_padic_auto_m2(capsys):
    code, out = run_cli(capsys, *PREC_ARGS, "padic", "--p", "7", "--a", "0",
                        "--k", "2", "--m1", "2")
    assert code == 0
    data = json.loads(out)
    assert data["m2"] == 8 and data["pass"] is True


def test_padic_invalid_exit_2(capsys):
    assert main([*PREC_ARGS, "padic", "--p", "5", "--a", "0", "--k", "3",
                 "--m1", "2"]) == 2


def test_modular_delta_report_and_roots_csv(tmp_path, capsys):
    csv_path = tmp_path / "roots.csv"
    code, out = run_cli(capsys, "--prec", "128", "modular", "delta", "--report",
                        "--roots-csv", str(csv_path))
    assert code == 0
    data = json.loads(out)
    assert data["profile"]["weight"] == 12
    assert data["tau_head"][:3] == [1, -24, 252]
    roots = data["zeta_poly_roots"]
    assert len(roots) == 10
    with mp.workprec(160):
        for re_s, im_s in roots:
            assert abs(mp.mpf(re_s) - mp.mpf(1) / 2) < mp.mpf("1e-20")
        assert mp.mpf(data["functional_eq_residual"]) < mp.mpf("1e-20")
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "re,im,residual"
    assert len(lines) == 11
    period_lines = (tmp_path / "roots.period.csv").read_text().splitlines()
    assert period_lines[0] == "re,im,residual"
    assert len(period_lines) == 11
    with mp.workprec(160):
        re_s, im_s, res_s = period_lines[1].split(",")
        assert abs(mp.sqrt(mp.mpf(re_s) ** 2 + mp.mpf(im_s) ** 2) - 1) < mp.mpf("1e-20")


def test_report_determinism(tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    for path in (out1, out2):
        code = main([*PREC_ARGS, "--out", str(path), "fixedlen",
                     "--m", "2", "--k", "2", "--exact"])
        assert code == 0
    assert out1.read_bytes() == out2.read_bytes()
    data = json.loads(out1.read_text())
    assert "build" in data["config"] and len(data["config"]["build"]) == 12


def test_csv_format_output(capsys):
    code, out = run_cli(capsys, "--prec", "128", "--format", "csv",
                        "fixedlen", "--m", "2", "--k", "1", "--exact")
    assert code == 0
    assert "exact_rational,1/6" in out


def test_prec_gate(capsys):
    assert main(["--prec", "32", "fixedlen", "--m", "2", "--k", "1"]) == 2
