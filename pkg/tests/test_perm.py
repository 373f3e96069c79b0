import itertools
from math import factorial

import pytest
from hypothesis import given

from conftest import perms
from permlab.perm import (
    Boundary,
    CycleStyle,
    DecoratedPermutation,
    DomainError,
    Permutation,
    Stat,
    all_permutations,
    cycle_form,
    format_cycles,
    hop_factorization,
    andre_x_factorization,
    is_in_m,
    parse_cycles,
    standardize,
    stat_count,
    stat_counts,
    stat_set,
)

SIGMA = Permutation.parse("4271365")


def test_example_statistics():
    assert stat_set(SIGMA, "exc") == {1, 3}
    assert stat_set(SIGMA, "fix") == {2, 6}
    assert stat_count(SIGMA, "cyc") == 4


def test_cycle_styles():
    assert format_cycles(cycle_form(SIGMA, CycleStyle.MAX_LAST_DEC_MAX)) == "(5 3 7)(6)(1 4)(2)"
    assert format_cycles(cycle_form(SIGMA, CycleStyle.MAX_FIRST_INC_MAX)) == "(2)(4 1)(6)(7 5 3)"


def test_parse_forms():
    assert Permutation.parse("4 2 7 1 3 6 5") == SIGMA
    assert Permutation.parse("4,2,7,1,3,6,5") == SIGMA
    assert Permutation.parse("(1 4)(2)(3 7 5)(6)") == SIGMA
    assert Permutation.from_cycles(parse_cycles("(3 7 5)(1 4)"), 7) == SIGMA
    with pytest.raises(DomainError):
        Permutation.parse("4a2")


def test_one_line_spacing():
    p = Permutation.parse("2 7 1 5 9 10 8 4 3 6")
    assert p.one_line() == "2 7 1 5 9 10 8 4 3 6"
    assert SIGMA.one_line() == "4271365"


def test_boundary_conventions():
    w = Permutation.parse("213")
    assert stat_set(w, "pk") == {2, 3} and stat_set(w, "val") == {1}
    assert stat_set(w, "dd", Boundary.INF_INF) == {2} and stat_set(w, "pk", Boundary.INF_INF) == set()
    assert stat_set(w, "da", Boundary.ZERO_INF) == {3} and stat_set(w, "pk", Boundary.ZERO_INF) == {2}
    assert stat_set(w, "dd", Boundary.INF_ZERO) == {2} and stat_set(w, "pk", Boundary.INF_ZERO) == {3}


def test_unknown_stat():
    with pytest.raises(ValueError):
        stat_count(SIGMA, "nope")


def test_cyclic_stat_needs_standard_ground():
    with pytest.raises(DomainError):
        stat_count(Permutation((2, 5, 3)), "cpk")


def test_decorated_parse():
    d = DecoratedPermutation.parse("R:(2)(9)(5 7 1) B:(6 4 3)(8)")
    assert d.n == 9
    assert sum(1 for _ in DecoratedPermutation.colorings(SIGMA)) == 2 ** 4


def test_factorizations():
    assert hop_factorization((4, 2, 7, 1, 3, 6, 5), 6) == ((4, 2, 7), (1, 3), 6, (5,), ())
    assert andre_x_factorization((4, 2, 7, 1, 3, 6, 5), 3) == ((4, 2, 7, 1), (), 3, (6, 5), ())


def test_family_sizes():
    # oracle: |M_n| = n!/... counted directly from the definition
    for n in range(6):
        direct = sum(
            1 for w in itertools.permutations(range(1, n + 1))
            if next((w[i] for i in range(n - 1) if w[i] > w[i + 1]), n) == n
        )
        assert sum(1 for _ in all_permutations("M", n)) == direct
        assert sum(1 for _ in all_permutations("S", n)) == factorial(n)


def _brute(w, name):
    n = len(w)
    inv = {w[i]: i + 1 for i in range(n)}
    if name == "des":
        return sum(w[i] > w[i + 1] for i in range(n - 1))
    if name == "exc":
        return sum(w[i] > i + 1 for i in range(n))
    if name == "cyc":
        seen, c = set(), 0
        for i in range(1, n + 1):
            if i not in seen:
                c += 1
                while i not in seen:
                    seen.add(i)
                    i = w[i - 1]
        return c
    if name == "cpk":
        return sum(inv[i] < i > w[i - 1] for i in range(1, n + 1))
    if name == "lmax":
        return sum(all(w[j] < w[i] for j in range(i)) for i in range(n))
    raise KeyError(name)


@given(perms())
def test_stats_against_brute_force(p):
    for name in ("des", "exc", "cyc", "cpk", "lmax"):
        assert stat_count(p, name) == _brute(p.word, name)


@given(perms())
def test_stat_counts_agrees(p):
    names = [s for s in Stat]
    expected = tuple(stat_count(p, s) for s in names)
    assert stat_counts(p, names) == expected
    shaped = [(s, Boundary.INF_ZERO) for s in ("pk", "rmaxdd", "lmaxda")]
    assert stat_counts(p, shaped) == tuple(stat_count(p, s, b) for s, b in shaped)


@given(perms())
def test_shape_partition(p):
    for c in Boundary:
        parts = [stat_set(p, s, c) for s in ("pk", "val", "da", "dd")]
        assert sum(map(len, parts)) == len(p.word)
        assert set().union(*parts) == set(p.word)


@given(perms())
def test_cycle_roundtrip(p):
    for style in CycleStyle:
        assert Permutation.from_cycles(cycle_form(p, style), len(p.word)) == p
    assert Permutation.parse(format_cycles(p.cycles()) or "") == p if p.word else True


@given(perms())
def test_sums(p):
    n = len(p.word)
    assert stat_count(p, "exc") + stat_count(p, "drop") + stat_count(p, "fix") == n
    assert stat_count(p, "des") + stat_count(p, "asc") == max(n - 1, 0)
    cyc = [stat_count(p, s) for s in ("cpk", "cval", "cda", "cdd")]
    assert cyc[0] == cyc[1]
    assert sum(cyc) + stat_count(p, "fix") == n


@given(perms())
def test_standardize(p):
    shifted = tuple(3 * a + 1 for a in p.word)
    assert standardize(shifted) == p


def test_is_in_m():
    assert is_in_m(Permutation.parse("1342"))
    assert not is_in_m(Permutation.parse("2143"))
