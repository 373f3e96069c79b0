import json

import pytest

from permlab.cli import main
from permlab.poly import from_json, MPoly

X, Y, T, A = MPoly.vars("x y t a")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate_acyc(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "acyc", "--n", "3")
    assert code == 0
    data = json.loads(out)
    assert from_json(data["terms"]) == A * (X + Y) * X * Y + 3 * A**2 * X * Y * T + A**3 * T**3


def test_enumerate_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "euler_exc", "--n", "3", "--k", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["coeff,t,a", "3,1,2", "1,0,1"]


def test_stats_example(capsys):
    code, out, _ = run(capsys, "stats", "--perm", "4271365", "--stats", "exc,fix,cyc")
    assert code == 0 and json.loads(out) == {"exc": 2, "fix": 2, "cyc": 4}


def test_stats_boundary_and_sets(capsys):
    code, out, _ = run(capsys, "stats", "--perm", "5376142", "--stats", "rmaxdd@inf_zero,asc", "--sets")
    assert json.loads(out) == {"rmaxdd@inf_zero": [2, 6], "asc": [2, 5]}


def test_check_trivial(capsys):
    code, out, _ = run(capsys, "check", "--suite", "all", "--max-n", "0")
    rep = json.loads(out)
    assert code == 0 and rep["pass"]
    assert [s["suite"] for s in rep["suites"]] == sorted(s["suite"] for s in rep["suites"])


def test_check_is_deterministic(capsys):
    a = run(capsys, "check", "--suite", "golden,sum-equ", "--max-n", "4")[1]
    b = run(capsys, "check", "--suite", "sum-equ,golden", "--max-n", "4", "--jobs", "2")[1]
    assert a == b


def test_gamma_csv(capsys):
    code, out, _ = run(capsys, "gamma", "--family", "axyt", "--n", "2", "--format", "csv")
    assert out.splitlines() == ["n,j,gamma,d", "0,0,1,1", "1,0,t*a,t*a", "2,0,t^2*a^2,t^2*a^2", "2,1,2*a,a"]


def test_gamma_json(capsys):
    code, out, _ = run(capsys, "gamma", "--family", "atilde", "--n", "2", "--t1")
    rows = json.loads(out)["rows"]
    assert rows[-1] == {"n": 2, "j": 1, "gamma": "a"}


@pytest.mark.parametrize("name,text,image", [
    ("theta1", "4271365", "5376142"),
    ("theta2", "4271365", "2416753"),
    ("rho", "R:(2)(9)(5 7 1) B:(6 4 3)(8)", "2 7 1 5 9 10 8 4 3 6"),
    ("psi", "(5)(6 4 2)(9 3 7 8)(10 1) S={4,8}", "(5)(6 2 4)(9 8 3 7)(10 1)"),
    ("varphi", "142836759", "143895672"),
])
def test_bijection(capsys, name, text, image):
    code, out, _ = run(capsys, "bijection", "--name", name, "--input", text)
    data = json.loads(out)
    assert code == 0 and data["image"] == image
    if "holds" in data["transport"]:
        assert data["transport"]["holds"]


def test_bijection_inverse(capsys):
    _, out, _ = run(capsys, "bijection", "--name", "theta1", "--input", "5376142", "--inverse")
    assert json.loads(out)["source"] == "4271365"


def test_andre(capsys):
    _, out, _ = run(capsys, "andre", "--check", "--input", "3124")
    data = json.loads(out)
    assert data["andre1"] and data["andre2"] and data["methodsAgree"]
    _, out, _ = run(capsys, "andre", "--map", "Phi", "--input", "7 8 5 6 9 2 10 1 11 3 12 4 13")
    assert json.loads(out)["image"] == "9 10 7 8 13 5 6 1 4 2 12 3 11"
    _, out, _ = run(capsys, "andre", "--map", "omega", "--input", "31425")
    tree = json.loads(out)["tree"]
    assert tree == "1(3|2(4|5))"
    _, out, _ = run(capsys, "andre", "--map", "Psi", "--input", tree)
    assert json.loads(out)["S_T"] == [2, 4]
    _, out, _ = run(capsys, "andre", "--map", "phi", "--input", "(5 6 1)(7 4 8 2)(3)")
    assert json.loads(out)["image"] == "5 6 1 7 4 8 2 3 9"
    _, out, _ = run(capsys, "andre", "--map", "zeta", "--input", "(1 3 2 4)")
    assert json.loads(out)["image"] == "2 1 3"


def test_series_check(capsys):
    code, out, _ = run(capsys, "series-check", "--name", "gen-CS-cyc", "--order", "5", "--points", "0..2")
    data = json.loads(out)
    assert code == 0 and data["pass"] and data["points"] == [0, 1, 2] and data["order"] == 5


@pytest.mark.parametrize("argv", [
    ["stats", "--perm", "42x", "--stats", "des"],
    ["stats", "--perm", "4271365", "--stats", "nope"],
    ["stats", "--perm", "4271365", "--stats", "pk@sideways"],
    ["frobnicate"],
    ["andre", "--map", "Psi", "--input", "1(2|"],
    ["andre", "--map", "zeta", "--input", "(1 3 2)"],
    ["bijection", "--name", "psi", "--input", "4271365"],
    ["bijection", "--name", "nope", "--input", "12"],
    ["enumerate", "--family", "acyc", "--n", "30"],
    ["enumerate", "--family", "nope", "--n", "3"],
    ["series-check", "--name", "nope"],
    ["series-check", "--name", "kim-zeng", "--order", "12"],
    ["check", "--suite", "nope"],
    ["stats", "--perm", "1 1", "--stats", "des"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err
