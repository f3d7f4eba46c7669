import json
import subprocess
import sys

import pytest

from rcong.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    doc = json.loads(out)
    assert set(doc) == {"command", "inputs", "result"}
    assert doc["command"] == argv[0]
    assert json.dumps(doc, indent=2, ensure_ascii=False) + "\n" == out
    return code, doc


def exit_code(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    capsys.readouterr()
    return exc.value.code


def test_check(capsys):
    code, doc = run_json(capsys, "check", "7", "8", "3", "4")
    assert code == 0
    assert doc["result"] == {"congruent": True, "q": -1, "classification": "non-trivial", "canonical_r": 3}
    code, doc = run_json(capsys, "check", "7", "8", "0", "4")
    assert code == 1 and doc["result"]["congruent"] is False and doc["result"]["q"] is None
    code, doc = run_json(capsys, "check", "5", "5", "0", "9")
    assert code == 0 and doc["result"]["q"] == 0 and doc["result"]["classification"] == "trivial"


def test_check_balanced(capsys):
    code, doc = run_json(capsys, "check", "7", "8", "3", "4", "--balanced")
    assert code == 0 and doc["result"]["canonical_r"] == -1
    assert doc["inputs"]["convention"] == "balanced"


def test_check_text(capsys):
    code, out, _ = run(capsys, "check", "7", "8", "3", "4")
    assert code == 0 and "congruent" in out and "-1" in out and "non-trivial" in out


def test_usage_errors(capsys):
    assert exit_code(capsys, "check", "1", "2", "3", "0") == 2
    assert exit_code(capsys, "check", "x", "2", "3", "4") == 2
    assert exit_code(capsys, "check", "1.5", "2", "3", "4") == 2
    assert exit_code(capsys, "solve", "1", "2", "3") == 2
    assert exit_code(capsys, "classes", "0", "3") == 2
    assert exit_code(capsys, "classes", "5", "3", "--range", "9..1") == 2
    assert exit_code(capsys, "classes", "5", "3", "--range", "nope") == 2
    assert exit_code(capsys, "verify", "bogus-id") == 2
    assert exit_code(capsys, "verify", "L2.13", "--bounds", "m=0") == 2
    assert exit_code(capsys) == 2


def test_big_integers(capsys):
    big = "9" * 5000
    code, doc = run_json(capsys, "check", big, "0", big, "7")
    assert code == 0 and doc["inputs"]["a"] == int(big)


def test_classes_table_of_five(capsys):
    code, out, _ = run(capsys, "classes", "5", "3", "--range", "-5..14")
    assert code == 0
    for seq in ("-2, 3, 8, 13", "-1, 4, 9, 14", "-5, 0, 5, 10", "-4, 1, 6, 11", "-3, 2, 7, 12"):
        assert seq in out
    code, doc = run_json(capsys, "classes", "5", "3", "--range", "-5..14")
    assert [row["rho"] for row in doc["result"]["rows"]] == [3, 4, 0, 1, 2]
    assert doc["result"]["rows"][0]["members"] == [-2, 3, 8, 13]


@pytest.mark.parametrize("m, r, rhos", [("4", "0", [0, 1, 2, 3]), ("4", "6", [2, 3, 0, 1])])
def test_classes_json(capsys, m, r, rhos):
    code, doc = run_json(capsys, "classes", m, r)
    assert code == 0 and [row["rho"] for row in doc["result"]["rows"]] == rhos


def test_perm(capsys):
    code, doc = run_json(capsys, "perm", "5", "3")
    assert code == 0 and doc["result"]["order"] == 5 and doc["result"]["cycles"] == [[0, 3, 1, 4, 2]]
    code, doc = run_json(capsys, "perm", "4", "2")
    assert doc["result"]["order"] == 2 and doc["result"]["cycles"] == [[0, 2], [1, 3]]
    code, doc = run_json(capsys, "perm", "6", "0")
    assert doc["result"]["identity"] is True and doc["result"]["order"] == 1
    code, out, _ = run(capsys, "perm", "5", "3")
    assert "( 0 1 2 3 4 )" in out and "( 3 4 0 1 2 )" in out and "(0 3 1 4 2)" in out


def test_solve(capsys):
    code, doc = run_json(capsys, "solve", "2", "3", "1", "4")
    assert code == 0 and doc["result"]["solutions"] == [0, 2]
    code, doc = run_json(capsys, "solve", "2", "1", "0", "4")
    assert code == 1 and doc["result"]["solvable"] is False
    code, doc = run_json(capsys, "solve", "1", "5", "2", "7")
    assert code == 0 and doc["result"]["solutions"] == [0]


def test_verify(capsys):
    code, doc = run_json(capsys, "verify", "L2.13")
    assert code == 0 and doc["result"]["all_confirmed"] is True
    code, doc = run_json(capsys, "verify", "T2.9-order")
    assert code == 1
    ce = doc["result"]["reports"][0]["counterexamples"][0]
    assert (ce["m"], ce["r"], ce["true_order"]) == (4, 2, 2)


def test_verify_all_small_bounds(capsys):
    code, doc = run_json(capsys, "verify", "all", "--bounds", "m=3,v=2,k=2,n=2", "--limit", "2")
    assert code == 1
    assert len(doc["result"]["reports"]) == 16
    assert all(len(r["counterexamples"]) <= 2 for r in doc["result"]["reports"])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rcong", "check", "7", "8", "3", "4", "--format", "json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["congruent"] is True
