import json
import subprocess
import sys

import pytest

from plethysm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_psi_example(capsys):
    code, out, _ = run(capsys, "map", "Psi", "--lambda", "3,1", "--d", "3", "--s", "4", "apply", "--t", "1 1 2 / 2")
    assert code == 0
    assert out == "-1 * |1 1 2 3 / 2 3 3 / 3|"


def test_zeta_and_hermite_examples(capsys):
    code, out, _ = run(capsys, "map", "zeta", "--l", "3", "--m", "3", "apply", "--v", "F_sym(3,1,1)")
    assert (code, out) == (0, "X^5∧X^2Y^3∧XY^4 − X^4Y∧X^3Y^2∧XY^4")
    code, out, _ = run(capsys, "map", "hermite", "--l", "2", "--m", "2", "apply", "--v", "(X^2⊗Y^2)_sym")
    assert (code, out) == (0, "(X⊗Y)_sym·(X⊗Y)_sym − 2(X⊗X)·(Y⊗Y)")


def test_rep_commands(capsys):
    assert run(capsys, "rep", "--spec", "sym_3(sym^3(E))", "--field", "GF(2)", "dim")[:2] == (0, "20")
    code, out, _ = run(capsys, "rep", "--spec", "sym^2(E)", "--format", "json", "act", "--g", "J", "--v", "X^2")
    assert json.loads(out)["vector"] == {"Y^2": "1"}
    code, out, _ = run(capsys, "rep", "--spec", "sym^2(E)", "--field", "GF(3)", "matrix", "--g", "M(γ)")
    assert out.splitlines()[0] == "1 γ γ^2"


def test_defect_command(capsys):
    code, out, _ = run(capsys, "defect", "--rep", "sym^4(E)", "--field", "GF(2)", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["defects"] == [0, 4] and data["unique"] and data["highest_weight"] == 4
    code, out, _ = run(capsys, "defect", "--rep", "sym^5(E)", "--field", "GF(5)", "--mode", "concrete")
    assert out.startswith("Undefined")


def test_theorem_command_exit_codes(capsys):
    code, out, _ = run(capsys, "theorem", "cor36", "--l", "2", "--m", "2", "--field", "GF(2)")
    assert code == 0
    assert json.loads(out)["verdict"] == "pass"
    code, out, _ = run(capsys, "theorem", "sym-duals", "--p", "3", "--lmax", "6")
    assert code == 1
    assert json.loads(out)["evidence"]["mismatches"] == [5]
    code, _, err = run(capsys, "theorem", "converse-hermite", "--p", "2", "--eps", "2", "--q", "4")
    assert code == 3 and "hypothesis" in err


def test_usage_errors(capsys):
    code, _, err = run(capsys, "rep", "--spec", "sym^(E)", "dim")
    assert code == 2 and "position 4" in err
    with pytest.raises(SystemExit) as exc:
        main(["rep"])
    assert exc.value.code == 2
    assert run(capsys, "theorem", "nonsense")[0] == 2


def test_straighten_command(capsys):
    code, out, _ = run(capsys, "straighten", "--t", "2 1 / 1 3")
    assert (code, out) == (0, "-1 * e(1 1 / 2 3)")
    code, out, _ = run(capsys, "straighten", "--combo", '{"1 2 / 2 1": 1, "1 1 / 2 2": 1}', "--dim", "2")
    assert out == "0"


def test_map_verify_and_dump(capsys):
    code, out, _ = run(capsys, "map", "cor36", "--l", "2", "--m", "2", "--field", "GF(2)", "verify")
    assert code == 0 and json.loads(out)["verdict"] == "pass"
    code, out, _ = run(capsys, "map", "symduals", "--l", "2", "--field", "GF(2)", "--format", "json", "dump")
    assert json.loads(out)["domain"] == "sym_2(E)"


def test_console_script_entry_point():
    out = subprocess.run([sys.executable, "-m", "plethysm.cli", "rep", "--spec", "E", "basis"],
                         capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["Y", "X"]
