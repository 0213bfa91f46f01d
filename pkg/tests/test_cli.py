import json
import subprocess
import sys

import pytest

from superschur.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("shape,space", [("1/", "1,1"), ("2/", "1,1"), ("2,1/", "2,1"),
                                         ("3,2/1", "1,2")])
def test_dim_agrees_three_ways(capsys, shape, space):
    code, out, _ = run(capsys, "dim", "--shape", shape, "--space", space)
    doc = json.loads(out)
    assert code == 0 and doc["ok"]
    assert doc["dim"] == doc["rank"] == doc["costandard_count"]
    if shape in ("1/", "2/"):
        assert doc["dim"] == 2


def test_dim_over_prime_field(capsys):
    code, out, _ = run(capsys, "dim", "--shape", "2,2/1", "--space", "1,1", "--field", "p=3")
    assert code == 0 and json.loads(out)["field"] == "GF(3)"


@pytest.mark.parametrize("kind,space", [("I", "1,1"), ("I", "2,1"), ("II", "2,2")])
def test_char(capsys, kind, space):
    code, out, _ = run(capsys, "char", "--shape", "2,1", "--space", space, "--type", kind)
    doc = json.loads(out)
    assert code == 0 and doc["equal"]
    assert doc["character"] == doc["symmetric_function"]


def test_char_text(capsys):
    _, out, _ = run(capsys, "char", "--shape", "2", "--space", "1,1")
    assert json.loads(out)["character"] == "1 * x1^2 + 1 * x1*y1"


def test_basis(capsys, tmp_path):
    target = tmp_path / "basis.json"
    code, out, _ = run(capsys, "basis", "--shape", "2", "--space", "1,1", "--out", str(target))
    assert code == 0 and out == ""
    doc = json.loads(target.read_text())
    assert doc["dim"] == 2 and doc["domain_shape"] == "1,1"


@pytest.mark.parametrize("argv", [
    ["dim", "--shape", "2,x", "--space", "1,1"],
    ["dim", "--shape", "1,2", "--space", "1,1"],
    ["dim", "--space", "1,1"],
    ["dim", "--shape", "2", "--space", "1"],
    ["dim", "--shape", "2", "--space", "0,0"],
    ["dim", "--shape", "2", "--field", "p=2"],
    ["dim", "--shape", "4,3", "--cap", "6"],
    ["char", "--shape", "2", "--space", "2,1", "--type", "II"],
    ["char", "--shape", "2/1", "--space", "1,1"],
    ["verify", "nonsense"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_verify_kernel(capsys):
    code, out, _ = run(capsys, "verify", "kernel", "--field", "p=3", "--max-deg", "3")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and doc["failure_count"] == 0


def test_verify_standard_example(capsys):
    code, out, _ = run(capsys, "verify", "standard", "--max-deg", "3", "--space", "2,2", "--field", "q")
    assert code == 0 and json.loads(out)["caps"]["fields"] == ["QQ"]


def test_verify_all_small_caps_is_deterministic(capsys):
    argv = ["verify", "all", "--max-deg", "2", "--space", "1,1", "--field", "q", "--seed", "3"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert {r["suite"] for r in doc["reports"]} >= {"hopf", "standard", "kernel", "straighten",
                                                    "filtration", "algebra", "invariants",
                                                    "characters", "classical"}


def test_failed_check_exits_1(capsys, monkeypatch):
    from superschur import chars
    monkeypatch.setattr(chars, "hook_schur", lambda lam, m, n: chars.MultiPoly(m, n))
    code, out, _ = run(capsys, "char", "--shape", "2", "--space", "1,1")
    assert code == 1 and not json.loads(out)["equal"]


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "superschur.cli", "dim", "--shape", "1", "--space", "1,0"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["dim"] == 1
