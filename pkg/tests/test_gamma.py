import pytest
from hypothesis import given, strategies as st

from permlab.enumeration import InvariantError
from permlab.gamma import (
    d_coeffs,
    d_models,
    dlp_sides,
    gamma_expand,
    gamma_models,
    gamma_table,
    peak_model_ab,
    recurrence_check,
)
from permlab.perm import DomainError
from permlab.poly import MPoly

X, Y, T, A, B = MPoly.vars("x y t a b")

# gamma vectors of the classical Eulerian polynomials A_{n+1}, as frozen
# values of an independent integer-only extraction (see _int_gamma)
CLASSICAL_GAMMA = {1: [1], 2: [1, 2], 3: [1, 8], 4: [1, 22, 16], 5: [1, 52, 136], 6: [1, 114, 720, 272]}


def _int_gamma(coeffs):
    """Peel (xy)^j (x+y)^(n-2j) off an integer palindromic coefficient list."""
    from math import comb
    h, n, out = list(coeffs), len(coeffs) - 1, []
    for j in range(n // 2 + 1):
        g = h[j]
        out.append(g)
        for k in range(n - 2 * j + 1):
            h[j + k] -= g * comb(n - 2 * j, k)
    assert not any(h)
    return out


def test_frozen_classical_values():
    rows = {1: [1, 1], 2: [1, 4, 1], 3: [1, 11, 11, 1], 4: [1, 26, 66, 26, 1],
            5: [1, 57, 302, 302, 57, 1], 6: [1, 120, 1191, 2416, 1191, 120, 1]}
    for n, row in rows.items():
        assert _int_gamma(row) == CLASSICAL_GAMMA[n]


@pytest.mark.parametrize("n", range(1, 7))
def test_axyt_at_one_is_classical(n):
    g = gamma_table("axyt", n).coeffs
    assert [c.substitute({"a": 1, "t": 1}) for c in g] == [MPoly.const(v) for v in CLASSICAL_GAMMA[n]]


@pytest.mark.parametrize("n", range(0, 7))
def test_recombine_and_positivity(n):
    for fam in ("atilde", "axyt"):
        g = gamma_table(fam, n)
        assert g.is_positive()
        assert gamma_table(fam, n, t1=True).coeffs == tuple(c.substitute({"t": 1}) for c in g.coeffs)


@given(st.integers(0, 6), st.data())
def test_gamma_expand_inverts_recombine(n, data):
    coeffs = data.draw(st.lists(st.integers(-4, 4), min_size=n // 2 + 1, max_size=n // 2 + 1))
    h = sum((c * (X * Y) ** j * (X + Y) ** (n - 2 * j) for j, c in enumerate(coeffs)), MPoly())
    assert list(gamma_expand(h, n).coeffs) == [MPoly.const(c) for c in coeffs]


def test_expand_rejects_bad_input():
    with pytest.raises(DomainError):
        gamma_expand(X**2 + Y, 2)
    with pytest.raises(DomainError):
        gamma_expand(X**2 + X * Y, 2)


def test_d_exactness():
    with pytest.raises(InvariantError):
        d_coeffs(gamma_expand(X * Y, 2))


@pytest.mark.parametrize("n", range(1, 6))
def test_models(n):
    gt, gl = gamma_table("atilde", n).coeffs, gamma_table("axyt", n).coeffs
    d = d_coeffs(gamma_table("axyt", n))
    for j in range(n // 2 + 1):
        assert set(gamma_models("tilde", n, j).values()) == {gt[j]}
        assert set(gamma_models("lin", n, j).values()) == {gl[j]}
        assert peak_model_ab(n, j) == gl[j].substitute({"a": (A + B) / 2})
        lhs, rhs = dlp_sides(n, j)
        assert lhs == rhs
        m = d_models(n, j)
        assert m["web"] == m["andre1"] == m["andre2"] == d[j]
        assert m["lmax"] == d[j].substitute({"t": 1})


@pytest.mark.parametrize("kind", ["A_nk", "gamma", "d", "E", "sff"])
def test_recurrences(kind):
    assert recurrence_check(kind, 6).passed


def test_unknown_recurrence():
    with pytest.raises(ValueError):
        recurrence_check("nope", 3)
