import json

import pytest

from hallsym import verify
from hallsym.cli import EXIT_COMPUTE, main
from hallsym.verify import SUITES, UnknownSuiteError, run_verify

SMALL = {"hopf": 3, "pieri-oracle": 3, "pairing": 3, "newton": 4, "cauchy": 4, "heisenberg": 4,
         "vertex": 4, "jing": 4, "psi": 4}


def test_suite_names():
    assert set(SUITES) == set(SMALL)


@pytest.mark.parametrize("suite", sorted(SMALL))
def test_suites_pass_at_small_degree(suite):
    report = run_verify(suite, SMALL[suite])
    assert report["passed"], [r for r in report["instances"] if not r["ok"]]
    assert report["failures"] == 0
    assert report["total"] == len(report["instances"]) > 0
    keys = [r["key"] for r in report["instances"]]
    assert keys == sorted(keys)
    json.dumps(report)


def test_reference_examples():
    assert run_verify("heisenberg", 5)["passed"]
    assert run_verify("cauchy", 4)["passed"]
    with pytest.raises(UnknownSuiteError):
        run_verify("bogus", 3)


def test_negative_degree_rejected():
    with pytest.raises(ValueError):
        run_verify("newton", -1)


def test_failures_are_serialized(monkeypatch, capsys):
    def broken(d):
        yield "b", True, None
        yield "a", False, {"lhs": "1", "rhs": "2"}

    monkeypatch.setitem(verify.SUITES, "broken", broken)
    report = run_verify("broken", 1)
    assert not report["passed"]
    assert report["failures"] == 1
    assert report["instances"][0] == {"key": "a", "ok": False, "instance": {"lhs": "1", "rhs": "2"}}
    assert main(["verify", "broken"]) == EXIT_COMPUTE
    capsys.readouterr()
