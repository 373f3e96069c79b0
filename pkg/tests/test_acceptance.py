"""Acceptance criteria, one PASS/FAIL line each (exact equality throughout).

Each criterion runs its suite's checks at the default bounds (n <= 7, series
order 7) from cold caches and enforces the runtime limit where one is set.
Checks against known misprints get their own FAIL lines and are strict xfails.
"""

import time

import pytest

from conftest import ACCEPTANCE_LINES
from permlab.verify import CHECKS, clear_caches, run_check

MAX_N, ORDER = 7, 7

CRITERIA = [
    (1, "golden values: cycle and binomial-Eulerian lists, gamma lists, Tables 1-3", "golden", 1.0),
    (2, "master identities for cyclic (n <= 7) and linear (n <= 6) statistics", "master", 30.0),
    (3, "exponential generating function registry at order 7", "series", 60.0),
    (4, "J-fraction against the enumerated ordinary generating function", "jfraction", 30.0),
    (5, "exc = asc, the symmetric identity and its classical specialisation", "sum-equ", 20.0),
    (6, "six gamma interpretations, gamma positivity, peak and DLP forms", "gamma", None),
    (7, "three interpretations of d_{n,j}", "d", 60.0),
    (8, "bijection roundtrips, transport laws and worked examples", "bijection", None),
    (9, "cyclic valley hopping action and orbit weights", "psi", None),
    (10, "Euler number counts and André membership tables", "counting", None),
    (11, "recurrences for the Eulerian numbers, gamma, d, E and sff", "recurrence", None),
]

ERRATA = sorted(name for name, c in CHECKS.items() if c.erratum)


def _run(names):
    clear_caches()
    t0 = time.perf_counter()
    results = [run_check(n, MAX_N, ORDER) for n in names]
    return results, time.perf_counter() - t0


@pytest.mark.parametrize("number,title,suite,limit", CRITERIA, ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(number, title, suite, limit):
    names = [n for n, c in CHECKS.items() if c.suite == suite and not c.erratum]
    assert names
    results, dt = _run(names)
    failed = [r for r in results if not r["pass"]]
    in_time = limit is None or dt < limit
    budget = f"limit {limit:g}s" if limit else "no limit"
    status = "PASS" if not failed and in_time else "FAIL"
    ACCEPTANCE_LINES.append(f"{status} {number:>2}. {title} [{len(results)} checks, {dt:.2f}s, {budget}]")
    for r in failed:
        ACCEPTANCE_LINES.append(f"       {r['name']}: {r.get('firstMismatch') or r.get('detail')}")
    assert not failed, failed
    assert in_time, f"{dt:.2f}s exceeds {limit}s"


@pytest.mark.xfail(strict=True, reason="printed value is a misprint; see the decisions ledger")
@pytest.mark.parametrize("name", ERRATA)
def test_printed_value(name):
    (result,), _ = _run([name])
    suite = CHECKS[name].suite
    mm = result.get("firstMismatch", {})
    status = "PASS" if result["pass"] else "FAIL"
    ACCEPTANCE_LINES.append(
        f"{status}  *  printed value [{suite}] {name} at {mm.get('index')}: "
        f"expected {mm.get('expected')!r}, got {mm.get('actual')!r}"
    )
    assert result["pass"]
