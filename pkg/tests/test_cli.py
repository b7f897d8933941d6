import json
import math

import pytest

from etazeros.cli import main
from etazeros.verify import THEOREM_NUMBERS


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------------------
# coeffs

APPENDIX_TEXT_FRACTIONS = {
    0: "1/2", 1: "-1/4", 3: "1/8", 5: "-1/4", 7: "17/16",
    9: "-31/4", 11: "691/8", 13: "-5461/4", 15: "929569/32",
}


def test_coeffs_text_matches_table(capsys):
    code, out, _ = run(capsys, "coeffs", "--n-max", "15", "--format", "text")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 17  # header + n = 0..15
    for n, frac in APPENDIX_TEXT_FRACTIONS.items():
        fields = lines[1 + n].split()
        assert fields[0] == str(n)
        assert fields[1] == frac
    for n in (2, 4, 6, 8, 10, 12, 14):
        assert lines[1 + n].split()[1] == "0"


def test_coeffs_json_schema(capsys):
    code, out, _ = run(capsys, "coeffs", "--n-max", "7")
    rows = json.loads(out)
    assert code == 0
    assert [sorted(r) for r in rows] == [
        ["g_n_denominator", "g_n_numerator", "g_n_over_n_factorial", "n"]] * 8
    assert rows[7]["g_n_numerator"] == 17
    assert rows[7]["g_n_denominator"] == 16


# ---------------------------------------------------------------------------
# eval

def test_eval_json_keys_and_zero(capsys):
    code, out, _ = run(capsys, "eval", "--a", "0.5", "--b", "14.134725",
                       "--method", "integral")
    assert code == 0
    obj = json.loads(out)
    assert sorted(obj) == ["F_abs", "F_im", "F_re", "a", "b", "err_est",
                           "method", "zeta_im", "zeta_re"]
    assert obj["F_abs"] < 1e-5


def test_eval_methods_agree(capsys):
    vals = {}
    for method in ("integral", "series+decomposition", "oracle"):
        code, out, _ = run(capsys, "eval", "--a", "0.5", "--b", "100",
                           "--method", method)
        assert code == 0
        obj = json.loads(out)
        vals[method] = complex(obj["F_re"], obj["F_im"])
    assert abs(vals["integral"] - vals["series+decomposition"]) < 1e-10
    assert abs(vals["integral"] - vals["oracle"]) < 1e-10


def test_eval_csv(capsys):
    code, out, _ = run(capsys, "eval", "--a", "0.5", "--b", "5",
                       "--format", "csv")
    assert code == 0
    head, row = out.strip().splitlines()
    assert head.split(",")[0:2] == ["a", "b"]
    assert float(row.split(",")[0]) == 0.5


# ---------------------------------------------------------------------------
# verify

def test_verify_requires_selector(capsys):
    code, _, err = run(capsys, "verify")
    assert code == 3
    assert "usage error" in err


def test_verify_unknown_theorem(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "3")
    assert code == 3


def test_verify_theorem_numbers():
    assert THEOREM_NUMBERS == (1, 2, 4, 5, 6, 7, 8, 9, 10)


def test_verify_theorem8_grid(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "8",
                       "--b-grid", "10,100,1000")
    assert code == 0
    obj = json.loads(out)
    assert obj["passed"] is True
    rep = obj["reports"][0]
    assert rep["name"] == "theorem8"
    assert sorted(rep) == ["checks", "name", "passed", "summary"]
    assert sorted(rep["checks"][0]) == [
        "discrepancy", "gating", "label", "lhs", "margin", "note", "passed",
        "rhs", "tol"]


def test_verify_failure_exit_code(capsys, monkeypatch):
    # a failing gating row must surface as exit status 1
    from etazeros.report import VerificationReport
    import etazeros.cli as cli_mod

    def failing(n, q, b_grid=None):
        rep = VerificationReport(name="theorem8")
        rep.add_inequality("forced failure", -1.0)
        return rep

    monkeypatch.setattr(cli_mod.verify, "run_theorem", failing)
    code, out, _ = run(capsys, "verify", "--theorem", "8", "--format", "json")
    assert code == 1
    assert json.loads(out)["passed"] is False


def test_verify_hypothesis_violation_not_silent(capsys):
    # b below the stated bound of the average bracketing is refused loudly
    code, _, err = run(capsys, "verify", "--theorem", "8", "--b-grid", "5")
    assert code == 3


def test_verify_determinism_bytes(capsys):
    args = ("verify", "--theorem", "8", "--format", "json")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_verify_csv_17_digits(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "8", "--format", "csv")
    assert code == 0
    # margins carry full precision: at least one 17-significant-digit field
    assert any(len(f.split(".")[-1]) >= 15
               for line in out.splitlines()[1:] for f in line.split(",")
               if "." in f and "e" not in f and f.count(".") == 1)


# ---------------------------------------------------------------------------
# decompose

def test_decompose_csv(capsys):
    code, out, _ = run(capsys, "decompose", "--a", "0.5", "--b", "100",
                       "--count", "5", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,t_2k,t_2k_plus_1,contribution,cumulative"
    assert len(lines) == 6
    first = lines[1].split(",")
    assert int(first[0]) == 11
    assert float(first[1]) == pytest.approx(math.exp(0.22 * math.pi), rel=1e-12)


def test_decompose_json_plan(capsys):
    code, out, _ = run(capsys, "decompose", "--a", "0.5", "--b", "100",
                       "--count", "2")
    obj = json.loads(out)
    assert obj["K"] == 11
    assert len(obj["endpoints"]) == 10
    assert obj["c"] == pytest.approx(math.exp(math.pi / 100.0), rel=1e-14)


def test_decompose_validates_a(capsys):
    code, _, err = run(capsys, "decompose", "--a", "1.5", "--b", "100")
    assert code == 3


# ---------------------------------------------------------------------------
# zeros

def test_zeros_json(capsys):
    code, out, _ = run(capsys, "zeros", "--b-min", "13", "--b-max", "15",
                       "--step", "0.25")
    assert code == 0
    arr = json.loads(out)
    assert len(arr) == 1
    z = arr[0]
    assert sorted(z) == ["b_star", "b_star_integral", "integral_certified",
                         "method", "residual", "residual_eta", "route_gap"]
    assert z["b_star"] == pytest.approx(14.134725, abs=1e-5)


def test_zeros_csv_scan(capsys):
    code, out, _ = run(capsys, "zeros", "--b-min", "13", "--b-max", "14",
                       "--step", "0.25", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "b,F1,F2,absF"
    assert len(lines) == 6


def test_zeros_validates_range(capsys):
    code, _, _ = run(capsys, "zeros", "--b-min", "30", "--b-max", "10")
    assert code == 3


# ---------------------------------------------------------------------------
# plumbing

def test_out_file(tmp_path, capsys):
    path = tmp_path / "table.json"
    code, out, _ = run(capsys, "coeffs", "--n-max", "3", "--out", str(path))
    assert code == 0
    assert out == ""
    rows = json.loads(path.read_text())
    assert rows[3]["g_n_numerator"] == 1 and rows[3]["g_n_denominator"] == 8


def test_numerical_nonconvergence_exit_code(capsys):
    # the eta oracle cannot reach 1e-12 at b = 5000 (rounding floor ~ 1e-11)
    code, _, err = run(capsys, "eval", "--a", "0.5", "--b", "5000",
                       "--method", "oracle")
    assert code == 2
    assert "non-convergence" in err


def test_eval_series_method_needs_big_enough_b(capsys):
    # the head series needs a whole period under the cap: b >= 2 pi / log 2
    code, _, err = run(capsys, "eval", "--a", "0.5", "--b", "5",
                       "--method", "series+decomposition")
    assert code == 3


def test_decompose_needs_big_enough_b(capsys):
    code, _, err = run(capsys, "decompose", "--a", "0.5", "--b", "5")
    assert code == 3


def test_bad_tol_is_usage_error(capsys):
    code, _, err = run(capsys, "eval", "--a", "0.5", "--b", "5",
                       "--tol", "1e-20")
    assert code == 3


def test_unknown_flag(capsys):
    code, _, err = run(capsys, "coeffs", "--frobnicate")
    assert code == 3


def test_module_entry_point():
    import subprocess
    import sys
    proc = subprocess.run(
        [sys.executable, "-m", "etazeros", "coeffs", "--n-max", "3",
         "--format", "csv"],
        capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == \
        "n,g_n_numerator,g_n_denominator,g_n_over_n_factorial"


def test_cross_process_determinism():
    # byte-identity must hold across fresh interpreter processes, not just
    # repeated in-process calls
    import subprocess
    import sys
    cmd = [sys.executable, "-m", "etazeros", "verify", "--theorem", "8",
           "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, timeout=120)
    b = subprocess.run(cmd, capture_output=True, timeout=120)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout and len(a.stdout) > 500
