import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from sp4gtz import cli
from sp4gtz.diagrams import diagram_to_shift, enumerate_diagrams
from sp4gtz.gamma import TheoremViolation, f_total
from sp4gtz.poly import LABEL_NAMES


def run(capsys, *argv):
    code = cli.run(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_basis(capsys):
    code, out = run(capsys, "basis", "--weight", "1", "0")
    assert code == 0 and out["schema"] == 1
    assert out["dim"] == 4 and len(out["diagrams"]) == 4
    first = out["diagrams"][0]
    assert diagram_to_shift(first["diagram"]) == tuple(first["shift"])
    assert len(first["shift10"]) == 10


def test_matrix_diagonal(capsys):
    code, out = run(capsys, "matrix", "--weight", "1", "1", "--generator", "F(-2,-2)")
    assert code == 0 and out["dim"] == 5
    assert all(r == c for r, c, _ in out["entries"])


@pytest.mark.parametrize("gen", ["F(-2,1)", "f( 1 , -2 )", "F(2,-2)"])
def test_matrix_methods_agree(capsys, gen):
    _, closed = run(capsys, "matrix", "--weight", "2", "1", "--generator", gen)
    _, oracle = run(capsys, "matrix", "--weight", "2", "1", "--generator", gen, "--method", "oracle")
    assert closed == oracle


def test_vector(capsys):
    code, out = run(capsys, "vector", "--diagram", "2", "1", "1", "1", "1", "0")
    assert code == 0
    assert out["diagram"] == [2, 1, 1, 1, 1, 0]
    assert out["solution"]["layers"] and out["realization"]
    code, _ = run(capsys, "vector", "--weight", "2", "2", "--diagram", "2", "1", "1", "1", "1", "0")
    assert code == 1


def test_verify_trivial(capsys):
    code, out = run(capsys, "verify", "--weight", "0", "0")
    assert code == 0 and out["passed"]
    assert all(c["confirmed"] for c in out["corrections"])


@pytest.mark.parametrize("m,mp", [(a, b) for a in range(4) for b in range(a + 1)])
def test_verify_sweep(capsys, m, mp):
    code, out = run(capsys, "verify", "--weight", str(m), str(mp))
    assert code == 0 and out["passed"]


def test_verify_max_weight(capsys):
    code, out = run(capsys, "verify", "--max-weight", "2")
    assert code == 0 and len(out["weights"]) == 6


@pytest.mark.parametrize("argv", [
    ["matrix", "--weight", "1", "1", "--generator", "F(1,1)"],
    ["basis", "--weight", "0", "1"],
    ["vector", "--diagram", "1", "0", "2", "0", "0", "0"],
    ["verify"],
    ["verify", "--max-weight", "-1"],
    ["frobnicate"],
    ["basis"],
])
def test_usage_errors(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == 1 and out["error"] == "usage" and out["message"]


def test_generator_error_lists_names(capsys):
    _, out = run(capsys, "matrix", "--weight", "1", "1", "--generator", "F(1,1)")
    assert "F(-2,1)" in out["message"]


def test_verification_failure_exit(capsys, monkeypatch):
    monkeypatch.setattr(cli.corrections, "confirm_all", lambda: [{"id": "x", "confirmed": False}])
    code, out = run(capsys, "verify", "--weight", "0", "0")
    assert code == 2 and not out["passed"]


def test_theorem_violation_exit(capsys, monkeypatch):
    def boom(w):
        raise TheoremViolation("forced", weight=w)

    monkeypatch.setattr(cli, "verify_weight", boom)
    code, out = run(capsys, "verify", "--weight", "1", "0")
    assert code == 3 and out["error"] == "theorem-violation" and "weight" in out["instance"]


def test_deterministic_output(capsys):
    argv = ["matrix", "--weight", "3", "2", "--generator", "F(1,-2)"]
    cli.run(argv)
    a = capsys.readouterr().out
    cli.run(argv)
    assert capsys.readouterr().out == a


def test_out_file(tmp_path, capsys):
    path = tmp_path / "basis.json"
    assert cli.run(["basis", "--weight", "2", "1", "--out", str(path)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(path.read_text())["dim"] == 16


def _solution_json():
    shifts = [diagram_to_shift(d) for d in enumerate_diagrams((2, 1))]
    f = f_total(shifts[2]).scale(3) + f_total(shifts[7]).scale(Fraction(-1, 2))
    return shifts, f.to_json(LABEL_NAMES)


def test_decompose_file(tmp_path, capsys):
    shifts, poly = _solution_json()
    path = tmp_path / "f.json"
    path.write_text(json.dumps({"poly": poly}))
    code, out = run(capsys, "decompose", "--input", str(path))
    assert code == 0
    got = {tuple(t["shift"]): Fraction(t["coeff"]) for t in out["terms"]}
    assert got == {shifts[2]: 3, shifts[7]: Fraction(-1, 2)}


def test_decompose_stdin(monkeypatch, capsys):
    shifts, poly = _solution_json()
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(poly)))
    code, out = run(capsys, "decompose")
    assert code == 0 and len(out["terms"]) == 2


def test_decompose_bad_input(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("not json"))
    code, out = run(capsys, "decompose")
    assert code == 1 and "cannot read" in out["message"]


def test_decompose_non_solution(monkeypatch, capsys):
    poly = [{"exponents": {"-2": 1, "-1,1": 1}, "coeff": "1"}]
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(poly)))
    code, out = run(capsys, "decompose")
    assert code == 1 and "not annihilated" in out["message"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "sp4gtz", "basis", "--weight", "1", "1"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["dim"] == 5
