import json
import subprocess
import sys

import pytest

from bqalg.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_check_consistent(capsys, corpus):
    code, out = run(capsys, "check", corpus / "uqso3.bqa")
    assert code == 0 and out["consistent"] and out["overlaps"] == []


def test_check_inconsistent(capsys, corpus):
    code, out = run(capsys, "check", corpus / "jacobi_fail.bqa")
    assert code == 1 and not out["consistent"]
    assert out["residues"]["X1"] == "-1"


def test_bad_syntax(capsys, corpus):
    code, out = run(capsys, "check", corpus / "bad_syntax.bqa")
    assert code == 2 and (out["line"], out["column"]) == (2, 10)


def test_missing_file(capsys, tmp_path):
    code, out = run(capsys, "check", tmp_path / "nope.bqa")
    assert code == 2 and "cannot read" in out["error"]


def test_reduce(capsys, corpus):
    code, out = run(capsys, "reduce", corpus / "heisenberg.bqa", "--expr", "x2*x1")
    assert code == 0 and out["normal_form"] == "x1*x2 + x3"
    code, out = run(capsys, "reduce", corpus / "heisenberg.bqa", "--expr", "x1*x2", "--order", "213")
    assert code == 0 and out["order"] == "213"
    code, out = run(capsys, "reduce", corpus / "heisenberg.bqa", "--expr", "x1*+")
    assert code == 2 and out["source"] == "--expr"


@pytest.mark.parametrize("name, family", [
    ("usl2.bqa", "LieType.Usl2"),
    ("heisenberg.bqa", "LieType.UH3"),
    ("oneq_mualpha_nonzero.bqa", "OneQ.MuAlphaNonzero"),
    ("twoq_unit.bqa", "TwoQ.Q1Q2Unit"),
    ("threeq_c5.bqa", "ThreeQ.C5"),
    ("uqso3.bqa", "ThreeQ.Quantum"),
    ("twogen_quantum_weyl.bqa", "TwoGen.QuantumWeyl"),
])
def test_classify_corpus(capsys, corpus, name, family):
    code, out = run(capsys, "classify", corpus / name)
    assert code == 0 and out["family"] == family


def test_classify_transformed_input(capsys, corpus):
    _, plain = run(capsys, "classify", corpus / "oneq_mualpha_nonzero.bqa")
    code, moved = run(capsys, "classify", corpus / "oneq_mualpha_nonzero.bqa",
                      "--scale", "2,1/3,5", "--shift", "1,0,-1")
    assert code == 0 and moved["family"] == plain["family"] and moved["params"] == plain["params"]
    # swapping x1 and x2 may invert q1, but the family is unchanged
    code, moved = run(capsys, "classify", corpus / "oneq_mualpha_nonzero.bqa", "--perm", "231")
    assert code == 0 and moved["family"] == plain["family"]


def test_structure(capsys, corpus):
    code, out = run(capsys, "structure", corpus / "twoq_unit.bqa")
    assert code == 0 and out["covered"] and out["verified"]
    code, out = run(capsys, "structure", corpus / "threeq_c5.bqa")
    assert code == 1 and not out["covered"]


def test_orbit(capsys):
    code, out = run(capsys, "orbit", "--case", 4, "--xi", "1,1,3", "--field", "fp:7")
    assert code == 0 and out["invariant"]["supp"] == "111"
    code, out = run(capsys, "orbit", "--case", 7, "--xi", "1,1,1")
    assert code == 2


def test_selftest_small(capsys):
    code = main(["selftest", "--trials", "2", "--field", "fp:7"])
    captured = capsys.readouterr()
    out = json.loads(captured.out)
    assert code == 0 and out["passed"]
    assert "PASS [1]" in captured.err


def test_output_is_deterministic(capsys, corpus):
    first = run(capsys, "classify", corpus / "aw3.bqa")
    second = run(capsys, "classify", corpus / "aw3.bqa")
    assert first == second


def test_module_entry_point(corpus):
    proc = subprocess.run([sys.executable, "-m", "bqalg", "check", str(corpus / "quantum_space.bqa")],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["consistent"]
