import json
import subprocess
import sys

import pytest

from grouplab.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope", "--max-order", "8"])
    assert exc.value.code == 2


def test_unknown_group_exit_code(capsys):
    code, _, err = run(["compute", "le", "--group", "Z9", "--exponent", "2"], capsys)
    assert code == 2 and "unknown group" in err


def test_verify_json_and_csv(tmp_path, capsys):
    code, out, _ = run(["verify", "--suite", "thresholds", "--max-order", "12", "--seed", "5"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["meta"]["seed"] == 5 and doc["results"]
    path = tmp_path / "r.csv"
    code, out, _ = run(["verify", "--suite", "mainTheo", "--max-order", "12", "--format", "csv",
                        "--report", str(path)], capsys)
    assert code == 0 and out == ""
    assert path.read_text().startswith("group,check,status")


def test_verify_output_is_byte_identical(capsys):
    argv = ["verify", "--suite", "lemmas", "--max-order", "10", "--seed", "2"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    assert a == b


def test_compute_le(capsys):
    code, out, _ = run(["compute", "le", "--group", "A4", "--exponent", "2"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["L"] == 5 and doc["order"] == 12


def test_psl2(capsys):
    code, out, _ = run(["psl2", "--q", "4", "--l3"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert set(doc) >= {"q", "order", "l3", "q_pow_11_4", "witness"}
    assert doc["order"] == 120 and doc["l3"] > 0
    code, out, _ = run(["psl2", "--q", "9", "--verify-formulas", "300"], capsys)
    assert code == 0 and json.loads(out)["formulas"]["cube_failures"] == 0


def test_lacunary(capsys):
    code, out, _ = run(["lacunary", "--p", "3", "--k", "4", "--l", "3", "--eps", "0.2",
                        "--trials", "5", "--seed", "1"], capsys)
    lines = [json.loads(s) for s in out.splitlines()]
    assert code == 0 and len(lines) == 5
    assert all(set(d) == {"q", "degF", "degQ", "bound", "rootsEqual"} and d["rootsEqual"] for d in lines)
    code, _, err = run(["lacunary", "--p", "2", "--k", "4", "--l", "1", "--eps", "0.2"], capsys)
    assert code == 1 and "PreconditionViolated" in err


@pytest.mark.parametrize("check", ["order", "coordinate", "ncycle", "survivor", "opportune", "determined"])
def test_wreath(check, capsys):
    code, out, _ = run(["wreath", "--base", "S3", "--n", "2", "--check", check, "--trials", "50"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["results"][0]["check"] == check
    assert all(r["status"] != "fail" for r in doc["results"])


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "grouplab", "compute", "le", "--group", "V4",
                          "--exponent", "2"], capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["L"] == 1
