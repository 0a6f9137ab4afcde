import json

import pytest

from hallsym.cli import EXIT_COMPUTE, EXIT_OK, EXIT_PARSE, main
from hallsym.parsing import parse_coeff, parse_element
from hallsym.qrat import QRat


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["command"] == argv[0]
    return data["result"]


def test_mul_json(capsys):
    res = run_json(capsys, "mul", "I[1]", "I[1]")
    assert res["basis"] == "I"
    assert parse_element(res["text"]) == parse_element("I[2] + (1+q)*I[1,1]")
    assert [t["partition"] for t in res["terms"]] == [[2], [1, 1]]
    assert QRat.from_json(res["terms"][1]["coeff"]) == parse_coeff("1+q")


def test_mul_evaluated(capsys):
    res = run_json(capsys, "mul", "I[1]", "I[1]", "--q", "2")
    assert [t["coeff"] for t in res["terms"]] == ["1", "3"]


def test_mul_in_other_basis(capsys):
    res = run_json(capsys, "mul", "p[1]", "p[1]", "--basis", "p")
    assert res["text"] == "p[1,1]"


def test_table_output(capsys):
    code, out, _ = run(capsys, "d0", "--degree", "2", "--table")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].split() == ["[2]", "[1,1]"]
    assert lines[1].split() == ["[2]", "q", "0"]
    assert lines[2].split() == ["[1,1]", "0", "q^2"]


def test_coproduct(capsys):
    res = run_json(capsys, "coproduct", "I[1,1]")
    assert res["bases"] == ["I", "I"]
    terms = {(tuple(t["left"]), tuple(t["right"])): QRat.from_json(t["coeff"]) for t in res["terms"]}
    assert terms == {((), (1, 1)): QRat(1), ((1,), (1,)): parse_coeff("q^-1"), ((1, 1), ()): QRat(1)}


def test_antipode(capsys):
    res = run_json(capsys, "antipode", "I[1,1]")
    assert parse_element(res["text"]) == parse_element("q^-1*I[2] + q^-1*I[1,1]")


def test_pair(capsys):
    assert QRat.from_json(run_json(capsys, "pair", "I[1]", "I[1]")) == parse_coeff("1/(q-1)")
    assert run_json(capsys, "pair", "I[1]", "I[1]", "--q", "3") == "1/2"


def test_convert(capsys):
    res = run_json(capsys, "convert", "P[2]", "--basis", "I")
    assert res["text"] == "I[2]"


def test_hallpoly_and_pieri(capsys):
    assert QRat.from_json(run_json(capsys, "hallpoly", "[1,1]", "[1]", "[1]")) == parse_coeff("1+q")
    assert run_json(capsys, "pieri", "[1,1]", "[1]", "1", "--q", "2") == "3"


def test_d0_apply(capsys):
    res = run_json(capsys, "d0", "P[2,1]")
    assert parse_element(res["text"]) == parse_element("q^2*P[2,1]")


def test_jing(capsys):
    res = run_json(capsys, "jing", "[1,1]", "--basis", "Q")
    assert res["text"] == "Q[1,1]"


def test_boson(capsys):
    res = run_json(capsys, "boson", "1", "--apply", "p[1]")
    assert QRat.from_json(res["terms"][0]["coeff"]) == parse_coeff("1/(q-1)")
    mat = run_json(capsys, "boson", "-1", "--degree", "1")
    assert mat["rows"] == [[2], [1, 1]]
    assert mat["cols"] == [[1]]


def test_expand(capsys):
    res = run_json(capsys, "expand", "P[2]", "--vars", "2")
    assert [t["exponents"] for t in res] == [[2, 0], [1, 1], [0, 2]]
    assert QRat.from_json(res[1]["coeff"]) == parse_coeff("1-q^-1")


def test_oracle(capsys):
    assert run_json(capsys, "oracle", "g", "--lambda", "[1,1]", "--mu", "[1]", "--nu", "[1]", "--q", "2") == 3
    assert run_json(capsys, "oracle", "aut", "--lambda", "[2,1]", "--q", "2") == 8


def test_verify_report(capsys):
    res = run_json(capsys, "verify", "newton", "--max-degree", "3")
    assert res["suite"] == "newton"
    assert res["passed"] is True
    assert res["total"] > 0
    assert res["failures"] == 0
    keys = [r["key"] for r in res["instances"]]
    assert keys == sorted(keys)


def test_determinism(capsys):
    argv = ["mul", "Q[2,1]", "Q[1]", "--basis", "P"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


@pytest.mark.parametrize(
    "argv",
    [
        ["mul", "I[1", "I[1]"],
        ["convert", "I[1,2]", "--basis", "P"],
        ["verify", "bogus"],
        ["expand", "e[1]"],
        ["boson", "0", "--degree", "1"],
        ["boson", "1"],
        ["d0"],
        ["oracle", "g", "--lambda", "[2]"],
        ["pair", "I[1]", "I[1]", "--q", "x"],
        ["hallpoly", "[1,2]", "[1]", "[1]"],
        ["frobnicate"],
        ["convert", "I[1]", "--basis", "Z"],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_PARSE
    assert err


@pytest.mark.parametrize(
    "argv",
    [
        ["pair", "I[1]", "I[1]", "--q", "1"],
        ["oracle", "g", "--lambda", "[7]", "--mu", "[7]", "--nu", "[]"],
        ["oracle", "aut", "--lambda", "[1]", "--q", "4"],
    ],
)
def test_computation_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_COMPUTE
    assert err.startswith("error:")
