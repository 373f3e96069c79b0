from math import comb, factorial

import pytest

from permlab.enumeration import (
    BoundError,
    Family,
    InvariantError,
    StatSpec,
    cached_distribution,
    generating_polynomial,
    max_n,
    named_polynomial,
    polynomial_from_distribution,
    pred,
    stat_distribution,
    where,
)
from permlab.perm import Boundary
from permlab.poly import MPoly

X, Y, T, A = MPoly.vars("x y t a")


def eulerian_rows(n_max):
    """Oracle: <n,k> by the recurrence (k+1)<n-1,k> + (n-k)<n-1,k-1>."""
    rows = {0: [1], 1: [1]}
    for n in range(2, n_max + 1):
        prev = rows[n - 1] + [0]
        rows[n] = [(k + 1) * prev[k] + (n - k) * (prev[k - 1] if k else 0) for k in range(n)]
    return rows


def stirling1_rising(n):
    p = MPoly.const(1)
    for i in range(n):
        p = p * (A + i)
    return p


def derangements(n):
    d = [1, 0]
    for m in range(2, n + 1):
        d.append((m - 1) * (d[-1] + d[-2]))
    return d[n]


@pytest.mark.parametrize("n", range(0, 8))
def test_acyc_specialisations(n):
    p = named_polynomial(Family.ACYC, n)
    assert p.substitute({"x": 1, "y": 1, "t": 1, "a": 1}) == factorial(n)
    assert p.substitute({"x": 1, "y": 1, "t": 1}) == stirling1_rising(n)
    assert p.substitute({"x": 1, "y": 1, "t": 0, "a": 1}) == derangements(n)
    if n:
        euler = sum((c * X**k for k, c in enumerate(eulerian_rows(n)[n])), MPoly())
        assert p.substitute({"y": 1, "t": 1, "a": 1}) == euler   # exc is Eulerian


@pytest.mark.parametrize("n", range(0, 7))
def test_axyt_is_shifted_eulerian(n):
    p = named_polynomial(Family.AXYT, n)
    euler = eulerian_rows(n + 1)[n + 1]
    assert p.substitute({"y": 1, "t": 1, "a": 1}) == sum((c * X**k for k, c in enumerate(euler)), MPoly())


@pytest.mark.parametrize("n", range(0, 7))
def test_atilde_total(n):
    # oracle: the first descent of a member of M_{n+1} starts at n+1, so
    # members are (increasing prefix ending in n+1) followed by anything
    total = 1 + sum(comb(n, m) * factorial(m) for m in range(1, n + 1))
    assert named_polynomial(Family.ATILDE, n).substitute({"x": 1, "y": 1, "t": 1, "a": 1}) == total


def test_distribution_partitioning():
    stats = ("des", "cyc", ("pk", Boundary.INF_ZERO))
    serial = stat_distribution("S", 6, stats)
    parallel = stat_distribution("S", 6, stats, jobs=3)
    assert serial == parallel
    assert sum(serial.values()) == 720


def test_constraints():
    d = stat_distribution("S", 5, ["fix"], [where("fix", 0)])
    assert dict(d) == {(0,): derangements(5)}
    assert sum(cached_distribution("S", 5, ("des",), (pred("andre1"),)).values()) == 16
    with pytest.raises(ValueError):
        pred("nope")


def test_polynomial_from_distribution():
    dist = stat_distribution("S", 3, ["des"])
    assert polynomial_from_distribution(dist, lambda d: X**d) == 1 + 4 * X + X**2


def test_negative_exponent_is_reported():
    spec = StatSpec.build([("des", "x", -1)], "S", 2)
    with pytest.raises(InvariantError, match="12"):
        generating_polynomial(spec)


def test_bound(monkeypatch):
    monkeypatch.delenv("PERMLAB_MAX_N", raising=False)
    assert max_n() == 9
    with pytest.raises(BoundError):
        named_polynomial(Family.ACYC, 10)
    monkeypatch.setenv("PERMLAB_MAX_N", "3")
    with pytest.raises(BoundError):
        stat_distribution("S", 4, ["des"])


def test_eulerian_numbers_need_k():
    with pytest.raises(ValueError):
        named_polynomial(Family.EULER_EXC, 3)
    # sum over k recovers the full cycle polynomial at x = y = 1
    for n in range(1, 6):
        total = sum((named_polynomial(Family.EULER_EXC, n, k) for k in range(1, n + 1)), MPoly())
        assert total == named_polynomial(Family.ACYC, n).substitute({"x": 1, "y": 1})


def test_family_parse():
    assert Family.parse("ACYC") is Family.ACYC
    with pytest.raises(ValueError):
        Family.parse("unknown")
