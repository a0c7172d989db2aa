import json

import pytest

from abeldt.cli import rat, run


def out(capsys, argv):
    code = run(argv)
    return code, capsys.readouterr().out.strip()


def test_examples(capsys):
    assert out(capsys, ["conj-dt", "--beta", "1", "--n", "1"]) == (0, "8")
    assert out(capsys, ["disc", "--v", "1,0,0,-1"]) == (0, "-1")
    code, text = out(capsys, ["fm-orbit", "--beta", "1", "--n", "1", "--bound", "5"])
    assert code == 0 and "(7,37)" in text


def test_subcommands(capsys):
    assert out(capsys, ["pair", "--v", "1,0,0,0", "--w", "0,0,0,1"]) == (0, "1")
    assert out(capsys, ["act", "--g", "1,1,0,1", "--v", "1,0,0,0"]) == (0, "1,1,1,1")
    assert out(capsys, ["act", "--g", "0,-1,1,0", "--v", "-1,0,0,0"]) == (0, "0,0,0,1")
    assert out(capsys, ["decompose", "--v", "2,1,1,1"]) == (0, "(1,0,1) + (1,1,1)")
    assert out(capsys, ["decompose", "--v", "1,0,-1,-1"]) == (0, "none")
    assert out(capsys, ["wallterm", "--v", "1,0,0,-2"]) == (0, "-5/2")
    assert out(capsys, ["conj-dt", "--beta", "0", "--n", "2"]) == (0, "-5/2")
    assert out(capsys, ["ring", "--v", "1,1", "--w", "1,-1"]) == (0, "2*eps[]")
    code, text = out(capsys, ["quest", "--beta", "0", "--n", "1", "--bound", "10", "--json"])
    assert code == 0 and json.loads(text)["ok"]
    code, text = out(capsys, ["a-coeffs", "--order", "40", "--json"])
    assert json.loads(text)["3"] == -8


def test_walls(capsys, tmp_path):
    path = tmp_path / "w.svg"
    code, _ = out(capsys, ["walls", "--v", "2,1,1,1", "--svg", str(path), "--viewport", "-1,2,2"])
    assert code == 0 and 'viewBox="-1 0 3 2"' in path.read_text()
    code, text = out(capsys, ["walls", "--v", "1,0,0,-1", "--json"])
    assert json.loads(text)["walls"][0]["kind"] == "line"


def test_usage_errors(capsys):
    assert run(["disc"]) == 2
    assert run(["disc", "--v", "1,2"]) == 2
    assert run(["bogus"]) == 2
    assert run(["conj-dt", "--beta", "0", "--n", "0"]) == 2
    assert run(["act", "--g", "2,0,0,1", "--v", "1,0,0,0"]) == 2
    assert run(["walls", "--v", "2,1,1,1", "--viewport", "1,0,1"]) == 2
    assert run(["quest", "--beta", "1", "--n", "1"]) == 2
    capsys.readouterr()


def test_spin_commands(capsys):
    code, text = out(capsys, ["spin-solve", "--json"])
    doc = json.loads(text)
    assert code == 0 and len(doc["bilinear"]) == 32 and len(doc["quartic"]) == 256
    code, text = out(capsys, ["spin-check"])
    assert code == 0 and text.startswith("PASS")


def test_rational_rendering():
    assert rat(3) == "3" and rat(0) == "0"
    from fractions import Fraction
    assert rat(Fraction(-5, 2)) == "-5/2" and rat(Fraction(4, 2)) == "2"
