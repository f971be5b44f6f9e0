import json
import subprocess
import sys

import pytest

from knotlab.cli import main

LEFT_TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert err == ""
    payload = json.loads(out)
    assert set(payload) == {"command", "input", "result", "paper_check"}
    return code, payload


# ---- jones ----

def test_jones_text(capsys):
    code, out, err = run(capsys, "jones", "--pd", LEFT_TREFOIL)
    assert code == 0
    assert "crossings: 3" in out
    assert "writhe: -3" in out
    assert "jones (t): -t^-4 + t^-3 + t^-1" in out


def test_jones_json(capsys):
    code, payload = run_json(capsys, "jones", "--pd", LEFT_TREFOIL)
    assert code == 0
    assert payload["command"] == "jones"
    assert payload["result"]["jones"] == "-t^-4 + t^-3 + t^-1"
    assert payload["result"]["coefficients"] == {"-4": -1, "-3": 1, "-1": 1}
    assert payload["result"]["writhe"] == -3


def test_jones_from_file(capsys, tmp_path):
    path = tmp_path / "knot.pd"
    path.write_text(LEFT_TREFOIL + "\n")
    code, payload = run_json(capsys, "jones", "--pd", f"@{path}")
    assert code == 0
    assert payload["result"]["crossings"] == 3


def test_jones_missing_file(capsys):
    code, out, err = run(capsys, "jones", "--pd", "@/no/such/file.pd")
    assert code == 1
    assert err.startswith("error:")


def test_jones_bad_diagram(capsys):
    code, out, err = run(capsys, "jones", "--pd", "X[1,2,3,4]")
    assert code == 1
    assert "error:" in err


# ---- alexander and signature ----

def test_alexander_text(capsys):
    code, out, err = run(capsys, "alexander", "--seifert", "[[0,2],[1,0]]")
    assert code == 0
    assert "alexander (t): 2 - 5t + 2t^2" in out
    assert "determinant: 9" in out


def test_alexander_rejects_bad_matrix(capsys):
    code, out, err = run(capsys, "alexander", "--seifert", "[[0,1],[1,0]]")
    assert code == 1
    assert "error:" in err


def test_signature_text(capsys):
    code, out, err = run(capsys, "signature", "--seifert", "[[-1,1],[0,-1]]")
    assert code == 0
    assert out.strip() == "signature: -2"


def test_signature_json(capsys):
    code, payload = run_json(capsys, "signature", "--seifert", "[[-1,1],[0,-1]]")
    assert code == 0
    assert payload["result"] == {"signature": -2}


# ---- sequiv ----

def test_sequiv_positive(capsys):
    code, out, err = run(capsys, "sequiv", "--seifert", "[[0,1],[2,0]]",
                         "--ell", "3")
    assert code == 0
    assert "first S-equivalent: yes" in out
    assert "certificate" in out
    assert "[[1, -1], [0, 1]]" in out


def test_sequiv_negative_is_still_exit_zero(capsys):
    code, out, err = run(capsys, "sequiv", "--seifert", "[[0,1],[2,0]]",
                         "--ell", "4")
    assert code == 0
    assert "first S-equivalent: no" in out
    assert "not decided" in out


def test_sequiv_oracle_lines(capsys):
    code, out, err = run(capsys, "sequiv", "--seifert", "[[0,1],[2,0]]",
                         "--ell", "3", "--oracle-bound", "2")
    assert code == 0
    assert "witness" in out
    assert "agrees" in out
    code, out, err = run(capsys, "sequiv", "--seifert", "[[0,1],[2,0]]",
                         "--ell", "1", "--oracle-bound", "2")
    assert code == 0
    assert "no witness, agrees" in out


def test_sequiv_json_shape(capsys):
    code, payload = run_json(capsys, "sequiv", "--seifert", "[[0,1],[2,0]]",
                             "--ell", "3", "--band", "second",
                             "--oracle-bound", "2")
    assert code == 0
    result = payload["result"]
    assert result["first_s_equivalent"] is True
    assert result["certificate"] == [[1, 0], [-1, 1]]
    assert result["oracle"]["agrees"] is True
    assert payload["input"]["band"] == "second"


def test_sequiv_rejects_non_genus_one(capsys):
    code, out, err = run(
        capsys, "sequiv", "--seifert",
        "[[0,1,0,0],[0,0,0,0],[0,0,0,1],[0,0,0,0]]", "--ell", "1",
    )
    assert code == 1
    assert "error:" in err


# ---- lambda ----

def test_lambda_seifert(capsys):
    code, out, err = run(capsys, "lambda", "--n", "0", "--m", "0", "--p", "3")
    assert code == 0
    assert "lambda(0,0,3)" in out
    assert "seifert: [[0, 2], [1, 0]]" in out


def test_lambda_jones(capsys):
    code, payload = run_json(capsys, "lambda", "--n", "0", "--m", "0",
                             "--p", "3", "--emit", "jones")
    assert code == 0
    assert payload["result"]["jones"] == (
        "t^-6 - t^-5 + t^-4 - 2t^-3 + t^-2 - t^-1 + 2"
    )
    assert "X[" in payload["result"]["pd"]


def test_lambda_alexander(capsys):
    code, out, err = run(capsys, "lambda", "--n", "0", "--m", "0", "--p", "3",
                         "--emit", "alexander")
    assert code == 0
    assert "alexander (t): 2 - 5t + 2t^2" in out


def test_lambda_rejects_bad_parameters(capsys):
    code, out, err = run(capsys, "lambda", "--n", "1", "--m", "0", "--p", "3")
    assert code == 1
    assert "error:" in err


# ---- report ----

def test_report_paper(capsys):
    code, out, err = run(capsys, "report", "--paper")
    assert code == 0
    assert "0 mismatches" in out
    assert "KNOWN-DISCREPANCY" in out


def test_report_requires_flag(capsys):
    code, out, err = run(capsys, "report")
    assert code == 1
    assert "error:" in err


def test_report_json(capsys):
    code, payload = run_json(capsys, "report", "--paper")
    assert code == 0
    assert payload["paper_check"] is True
    statuses = {line["status"] for line in payload["result"]["lines"]}
    assert statuses == {"MATCH", "KNOWN-DISCREPANCY"}


# ---- usage and determinism ----

def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["jones"])  # missing --pd
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_output_is_deterministic(capsys):
    _, first = run_json(capsys, "lambda", "--n", "2", "--m", "-2", "--p", "3",
                        "--emit", "jones")
    _, second = run_json(capsys, "lambda", "--n", "2", "--m", "-2", "--p", "3",
                         "--emit", "jones")
    assert first == second


def test_console_script_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "knotlab.cli", "jones", "--pd", LEFT_TREFOIL],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "jones (t): -t^-4 + t^-3 + t^-1" in proc.stdout
