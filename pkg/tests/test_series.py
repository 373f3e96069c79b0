from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from permlab.poly import MPoly
from permlab.series import (
    IDENTITIES,
    E_series,
    Series,
    SeriesError,
    check_identity,
    even_trig,
    jfraction,
)

X, A = MPoly.vars("x a")
N = 8


def series(order=6):
    coef = st.integers(-3, 3).map(MPoly.const)
    return st.lists(coef, min_size=order + 1, max_size=order + 1).map(lambda cs: Series.of(cs, order))


def unit_series(order=6):
    return series(order).map(lambda s: s - s[0] + 1)


def ints(s):
    return [int(c.constant_term()) for c in s.egf_coeffs()]


def test_sec_tan_are_euler_numbers():
    s = even_trig("sec", 1, N) + even_trig("tanOverTheta", 1, N)
    assert ints(s) == [1, 1, 1, 2, 5, 16, 61, 272, 1385]
    assert ints(even_trig("sec", 1, N)) == [1, 0, 1, 0, 5, 0, 61, 0, 1385]


def test_exp_and_log():
    e = Series.exp_linear(1, N)
    assert ints(e) == [1] * (N + 1)
    assert (e.log() - Series.z(N)) == Series.const(0, N)
    # exp(a z) keeps a symbolic
    assert Series.exp_linear(A, N).egf_coeffs() == [A**n for n in range(N + 1)]


def test_catalan_jfraction():
    c = jfraction(lambda k: 0, lambda k: 1, 6)
    assert [int(c[i].constant_term()) for i in range(7)] == [1, 0, 1, 0, 2, 0, 5]


def test_motzkin_jfraction():
    m = jfraction(lambda k: 1, lambda k: 1, 7)
    assert [int(m[i].constant_term()) for i in range(8)] == [1, 1, 2, 4, 9, 21, 51, 127]


def test_E_series_recurrence():
    # at x = 1 the recurrence gives the Euler numbers shifted by one
    e = E_series(6).substitute({"x": 1})
    assert ints(e) == [1, 1, 2, 5, 16, 61, 272]


@given(unit_series(), unit_series())
def test_field_laws(p, q):
    assert (p * q) / q == p
    assert p * p.invert() == Series.const(1, p.order)
    assert (p * q).log() == p.log() + q.log()


@given(series(), series())
def test_derivative_rules(p, q):
    lhs = (p * q).differentiate()
    rhs = p.differentiate() * q + p * q.differentiate()
    m = min(lhs.order, rhs.order)
    assert lhs.truncate(m) == rhs.truncate(m)
    r = (p - p[0]).differentiate().integrate()
    assert r.truncate(r.order) == (p - p[0]).truncate(r.order)


@given(unit_series(5), st.integers(-3, 3))
def test_power_matches_integer_power(p, m):
    assert p.power(m) == (p.pow_int(m) if m >= 0 else p.invert().pow_int(-m))
    assert p.power(MPoly.const(2)) == p * p


def test_symbolic_power_specialises():
    s = Series.exp_linear(X, 5)
    sym = (1 + Series.z(5)).power(A)
    for k in range(4):
        assert sym.substitute({"a": k}) == (1 + Series.z(5)).pow_int(k)
    assert s.power(A) == Series.exp_linear(X * A, 5)


def test_errors():
    with pytest.raises(SeriesError):
        Series.z(4).invert()
    with pytest.raises(SeriesError):
        (1 + Series.z(4)).exp()
    with pytest.raises(SeriesError):
        Series.z(4).log()
    with pytest.raises(ValueError):
        even_trig("sech", 1, 4)


def test_egf_storage():
    s = Series.egf([1, 2, 6], 2)
    assert list(s.coeffs) == [MPoly.const(1), MPoly.const(2), MPoly.const(3)]
    assert s.egf_coeffs() == [MPoly.const(v) for v in (1, 2, 6)]
    assert str(Series.egf([1, 1], 1)) != ""
    assert Series.const(Fraction(1, 2), 1)[0] == MPoly.const(Fraction(1, 2))


@pytest.mark.parametrize("name", sorted(IDENTITIES))
def test_identity(name):
    v = check_identity(name, order=6 if name == "master-egf" else 7)
    assert v.passed, v.to_dict()


def test_identity_at_small_order_and_points():
    v = check_identity("gen-CS-cyc", order=4, points=[0, 3])
    assert v.passed and v.info["points"] == [0, 3] and v.info["order"] == 4
    # identities without exponent symbols have no diagonal points
    assert check_identity("kim-zeng", order=4, points=[0, 3]).info["points"] == []


def test_identity_errors():
    with pytest.raises(ValueError):
        check_identity("nope")
    with pytest.raises(ValueError):
        check_identity("kim-zeng", order=11)

