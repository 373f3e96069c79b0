import pytest

from permlab.verdict import Verdict
from permlab.verify import CHECKS, SUITES, Check, report, run_check, run_suites


def test_every_suite_has_checks():
    used = {c.suite for c in CHECKS.values()}
    assert used == set(SUITES)


def test_trivial_run_passes():
    results = run_suites(SUITES, max_n=0, order=0)
    rep = report(results, 0, 0)
    assert rep["pass"]
    for s in rep["suites"]:
        for c in s["checks"]:
            assert c["pass"] or c.get("erratum"), c


def test_errata_are_flagged():
    errata = sorted(n for n, c in CHECKS.items() if c.erratum)
    assert errata == ["cgk-printed-convention", "example-Phi-printed", "example-psi-caption",
                      "golden-atilde-gamma-printed"]
    for name in errata:
        assert not run_check(name, 7, 7)["pass"]


def test_crash_becomes_failure(monkeypatch):
    def boom(max_n, order):
        raise RuntimeError("kaput")
    monkeypatch.setitem(CHECKS, "boom", Check("boom", "enum", boom))
    out = run_check("boom", 1, 1)
    assert out == {"name": "boom", "pass": False, "detail": "error: RuntimeError: kaput"}


def test_report_ignores_errata_but_not_failures():
    ok = Verdict("a", True).to_dict()
    bad = Verdict.fail("b", "n=1", 1, 2).to_dict()
    errata = dict(bad, erratum=True)
    assert report({"x": [ok, errata]}, 1, 1)["pass"]
    rep = report({"x": [ok, bad]}, 1, 1)
    assert not rep["pass"]
    assert rep["suites"][0]["checks"][1]["firstMismatch"] == {"index": "n=1", "expected": "1", "actual": "2"}


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suites(["nope"], 1, 1)


@pytest.mark.parametrize("name", sorted(n for n, c in CHECKS.items() if c.suite == "enum"))
def test_enum_invariants(name):
    out = run_check(name, 7, 7)
    assert out["pass"], out
