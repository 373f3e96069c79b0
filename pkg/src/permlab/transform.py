"""Bijections on permutations: two fundamental transformations, the split map
rho on cycle-colored permutations, valley hopping (linear and cyclic) and the
succession bijection.

Functions that accept cycles work on any set of letters, since rho applies
the transformations to the red and blue parts separately.
"""

from __future__ import annotations

from itertools import chain, combinations
from typing import Iterable, Iterator, Sequence

from .perm import (
    Boundary,
    CycleStyle,
    DecoratedPermutation,
    DomainError,
    Permutation,
    all_permutations,
    arrange_cycles,
    hop_factorization,
    stat_set,
)

__all__ = [
    "theta1",
    "theta1_inv",
    "theta2",
    "theta2_inv",
    "theta1_word",
    "theta2_word",
    "theta1_cycles",
    "theta2_cycles",
    "rho",
    "rho_inv",
    "xi",
    "xi_set",
    "shape",
    "psi_x",
    "psi",
    "orbit_representative",
    "orbit",
    "orbits",
    "varphi_suc",
    "varphi_suc_inv",
]

Word = tuple[int, ...]


def _erase(cycles: Iterable[Sequence[int]]) -> Word:
    return tuple(chain.from_iterable(cycles))


def theta1_word(cycles: Iterable[Sequence[int]]) -> Word:
    """Cycles with their maximum last, by decreasing maximum, parentheses erased."""
    return _erase(arrange_cycles(cycles, CycleStyle.MAX_LAST_DEC_MAX))


def theta2_word(cycles: Iterable[Sequence[int]]) -> Word:
    """Cycles with their maximum first, by increasing maximum, parentheses erased."""
    return _erase(arrange_cycles(cycles, CycleStyle.MAX_FIRST_INC_MAX))


def theta1_cycles(word: Sequence[int]) -> list[Word]:
    """Inverse of :func:`theta1_word`: cut after every right-to-left maximum."""
    out, cur, best = [], [], 0
    for a in reversed(word):
        if a > best:
            if cur:
                out.append(tuple(reversed(cur)))
            cur, best = [a], a
        else:
            cur.append(a)
    if cur:
        out.append(tuple(reversed(cur)))
    return out[::-1]


def theta2_cycles(word: Sequence[int]) -> list[Word]:
    """Inverse of :func:`theta2_word`: cut before every left-to-right maximum."""
    out, cur, best = [], [], 0
    for a in word:
        if a > best:
            if cur:
                out.append(tuple(cur))
            cur, best = [a], a
        else:
            cur.append(a)
    if cur:
        out.append(tuple(cur))
    return out


def theta1(p: Permutation) -> Permutation:
    return Permutation(theta1_word(p.cycles()))


def theta2(p: Permutation) -> Permutation:
    return Permutation(theta2_word(p.cycles()))


def theta1_inv(q: Permutation) -> Permutation:
    q.require_standard()
    return Permutation.from_cycles(theta1_cycles(q.word), len(q))


def theta2_inv(q: Permutation) -> Permutation:
    q.require_standard()
    return Permutation.from_cycles(theta2_cycles(q.word), len(q))


# rho ---------------------------------------------------------------------------


def rho(d: DecoratedPermutation) -> Permutation:
    """``theta2(red) (n+1) theta1(blue)``, a permutation of [n+1]."""
    return Permutation(theta2_word(d.red) + (d.n + 1,) + theta1_word(d.blue))


def rho_inv(p: Permutation) -> DecoratedPermutation:
    p.require_standard()
    k = p.word.index(len(p))
    return DecoratedPermutation(
        tuple(theta2_cycles(p.word[:k])), tuple(theta1_cycles(p.word[k + 1:]))
    )


# valley hopping ------------------------------------------------------------------


def shape(word: Sequence[int], x: int, c: Boundary) -> str:
    """One of ``"val"``, ``"pk"``, ``"da"``, ``"dd"`` for letter x under boundary c."""
    i = list(word).index(x)
    left = word[i - 1] if i > 0 else c.left
    right = word[i + 1] if i + 1 < len(word) else c.right
    if left > x < right:
        return "val"
    if left < x > right:
        return "pk"
    return "da" if left < x else "dd"


def _hop(word: Sequence[int], x: int) -> Word:
    w1, w2, _, w4, w5 = hop_factorization(word, x)
    return w1 + w4 + (x,) + w2 + w5


def xi(p: "Permutation | Sequence[int]", x: int) -> Permutation:
    """Move x across its smaller neighbours when it is a double ascent or descent.

    Both ends of the word are read as infinity.
    """
    word = p.word if isinstance(p, Permutation) else tuple(p)
    if x not in word:
        raise DomainError(f"letter {x} not in word")
    if shape(word, x, Boundary.INF_INF) in ("da", "dd"):
        return Permutation(_hop(word, x))
    return Permutation(word)


def xi_set(p: Permutation, letters: Iterable[int]) -> Permutation:
    for x in sorted(set(letters)):
        p = xi(p, x)
    return p


def psi_x(p: Permutation, x: int) -> Permutation:
    """Cyclic valley hopping of one letter, conjugated by theta2.

    The word theta2(p) is read with a 0 in front and infinity behind.
    """
    p.require_standard()
    if not 1 <= x <= len(p):
        raise DomainError(f"letter {x} not in [n]")
    if p(x) == x:
        return p
    word = theta2_word(p.cycles())
    if shape(word, x, Boundary.ZERO_INF) in ("da", "dd"):
        return Permutation.from_cycles(theta2_cycles(_hop(word, x)), len(p))
    return p


def psi(p: Permutation, S: Iterable[int]) -> Permutation:
    """Composite action over S, applied in increasing letter order."""
    S = sorted(set(S))
    if any(not 1 <= x <= len(p) for x in S):
        raise ValueError(f"S={S} is not a subset of [{len(p)}]")
    for x in S:
        p = psi_x(p, x)
    return p


def orbit_representative(p: Permutation) -> Permutation:
    """The orbit member without cyclic double descents."""
    return psi(p, stat_set(p, "cdd"))


def _subsets(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def orbit(p: Permutation) -> list[Permutation]:
    """All images of p under the cyclic action, in sorted word order."""
    movable = sorted(stat_set(p, "cda") | stat_set(p, "cdd"))
    return sorted({psi(p, S) for S in _subsets(movable)}, key=lambda q: q.word)


def orbits(n: int) -> dict[Permutation, list[Permutation]]:
    """Partition of the permutations of [n], keyed by orbit representative."""
    out: dict[Permutation, list[Permutation]] = {}
    for p in all_permutations("S", n):
        out.setdefault(orbit_representative(p), []).append(p)
    return out


# successions ---------------------------------------------------------------------


def varphi_suc(p: Permutation) -> Permutation:
    """Rotate the word one step left, then apply theta1.

    Keeps the first letter and carries (excHat, dropV, fixHat) to
    (bascB, desB, sucB).
    """
    p.require_standard()
    if len(p) == 0:
        return p
    return theta1(Permutation(p.word[1:] + p.word[:1]))


def varphi_suc_inv(q: Permutation) -> Permutation:
    q.require_standard()
    if len(q) == 0:
        return q
    w = theta1_inv(q).word
    return Permutation(w[-1:] + w[:-1])
