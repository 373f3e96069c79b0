"""Permutations, canonical cycle writings and the statistics built on them.

A :class:`Permutation` is a word of distinct positive integers.  When its
letters are exactly ``1..n`` it is also read as the map ``i -> word[i-1]``;
the functional (cyclic) statistics require that reading.  Linear statistics
accept any ground set, which lets recognisers recurse into subwords.

Letter statistics such as ``pk`` depend on what sits outside the word.  The
:class:`Boundary` passed to :func:`stat_set` names the two virtual letters.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

__all__ = [
    "DomainError",
    "Boundary",
    "Stat",
    "CycleStyle",
    "Permutation",
    "DecoratedPermutation",
    "stat_set",
    "stat_count",
    "stat_counts",
    "arrange_cycles",
    "cycle_form",
    "format_cycles",
    "parse_cycles",
    "hop_factorization",
    "andre_x_factorization",
    "standardize",
    "all_permutations",
    "is_in_m",
]

INF = float("inf")


class DomainError(ValueError):
    """Input outside the domain of an operation (bad ground set, absent letter)."""


class Boundary(enum.Enum):
    """Virtual letters placed before the first and after the last letter."""

    ZERO_ZERO = (0, 0)
    INF_INF = (INF, INF)
    ZERO_INF = (0, INF)
    # sigma_0 = infinity, sigma_{n+1} = 0: the shape seen by a word that
    # followed a removed leading maximum
    INF_ZERO = (INF, 0)

    @property
    def left(self):
        return self.value[0]

    @property
    def right(self):
        return self.value[1]


class Stat(str, enum.Enum):
    DES = "des"
    ASC = "asc"
    EXC = "exc"
    DROP = "drop"
    FIX = "fix"
    CYC = "cyc"
    VAL = "val"
    PK = "pk"
    DA = "da"
    DD = "dd"
    LMAX = "lmax"
    RMAX = "rmax"
    RMIN = "rmin"
    LMAXPK = "lmaxpk"
    RMAXPK = "rmaxpk"
    LMAXDA = "lmaxda"
    RMAXDD = "rmaxdd"
    RMINDA = "rminda"
    CPK = "cpk"
    CVAL = "cval"
    CDA = "cda"
    CDD = "cdd"
    SUC = "suc"
    BASC = "basc"
    SUCB = "sucB"
    DESB = "desB"
    BASCB = "bascB"
    EXCHAT = "excHat"
    FIXHAT = "fixHat"
    DROPV = "dropV"

    @classmethod
    def parse(cls, name: "str | Stat") -> "Stat":
        if isinstance(name, Stat):
            return name
        try:
            return cls(name)
        except ValueError:
            pass
        for s in cls:
            if s.value.lower() == str(name).lower():
                return s
        raise ValueError(f"unknown statistic {name!r}")


# statistics that read the word as a map of [n] to itself
FUNCTIONAL = frozenset(
    {
        Stat.EXC, Stat.DROP, Stat.FIX, Stat.CYC, Stat.CPK, Stat.CVAL,
        Stat.CDA, Stat.CDD, Stat.EXCHAT, Stat.FIXHAT, Stat.DROPV,
    }
)
# statistics whose value depends on the boundary convention
SHAPED = frozenset(
    {
        Stat.VAL, Stat.PK, Stat.DA, Stat.DD, Stat.LMAXPK, Stat.RMAXPK,
        Stat.LMAXDA, Stat.RMAXDD, Stat.RMINDA,
    }
)


class CycleStyle(enum.Enum):
    MAX_LAST_DEC_MAX = "MaxLastDecMax"
    MAX_FIRST_INC_MAX = "MaxFirstIncMax"
    MIN_LAST_INC_MIN = "MinLastIncMin"
    MIN_FIRST = "MinFirst"


@dataclass(frozen=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(a) for a in self.word)
        object.__setattr__(self, "word", w)
        if any(a <= 0 for a in w):
            raise DomainError("letters must be positive integers")
        if len(set(w)) != len(w):
            raise DomainError(f"repeated letter in {w}")

    # construction -----------------------------------------------------------

    @classmethod
    def of(cls, *letters: int) -> "Permutation":
        return cls(tuple(letters))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """One-line notation: ``"4 2 7 1"``, ``"4,2,7,1"`` or compact ``"4271"``."""
        text = text.strip()
        if not text:
            return cls(())
        if text.startswith("("):
            return cls.from_cycles(parse_cycles(text))
        parts = [p for p in re.split(r"[\s,]+", text) if p]
        if len(parts) == 1 and len(parts[0]) > 1:
            parts = list(parts[0])
        if not all(p.isdigit() for p in parts):
            raise DomainError(f"cannot parse permutation {text!r}")
        return cls(tuple(int(p) for p in parts))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int | None = None) -> "Permutation":
        """Permutation of [n] from disjoint cycles; unlisted letters are fixed."""
        cycles = [tuple(c) for c in cycles]
        letters = [a for c in cycles for a in c]
        if len(set(letters)) != len(letters):
            raise DomainError("cycles are not disjoint")
        size = max(letters, default=0) if n is None else n
        if letters and (min(letters) < 1 or max(letters) > size):
            raise DomainError("cycle letter outside [n]")
        image = list(range(size + 1))
        for c in cycles:
            for a, b in zip(c, c[1:] + c[:1]):
                image[a] = b
        return cls(tuple(image[1:]))

    # basic views ------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    @property
    def n(self) -> int:
        return len(self.word)

    @cached_property
    def ground(self) -> tuple[int, ...]:
        return tuple(sorted(self.word))

    @cached_property
    def is_standard(self) -> bool:
        return self.ground == tuple(range(1, len(self.word) + 1))

    def require_standard(self) -> None:
        if not self.is_standard:
            raise DomainError(f"ground of {self} is not [n]")

    def __call__(self, i: int) -> int:
        self.require_standard()
        return self.word[i - 1]

    @cached_property
    def inverse_word(self) -> tuple[int, ...]:
        self.require_standard()
        inv = [0] * len(self.word)
        for i, a in enumerate(self.word, 1):
            inv[a - 1] = i
        return tuple(inv)

    def inverse(self) -> "Permutation":
        return Permutation(self.inverse_word)

    def compose(self, other: "Permutation") -> "Permutation":
        """``(self ∘ other)(i) = self(other(i))``."""
        return Permutation(tuple(self(other(i)) for i in range(1, len(self) + 1)))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles, each starting at its least letter, ordered by least letter."""
        self.require_standard()
        seen = set()
        out = []
        for start in range(1, len(self.word) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self.word[start - 1]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.word[nxt - 1]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        return self.one_line()

    def one_line(self, compact: bool | None = None) -> str:
        if compact is None:
            compact = all(a < 10 for a in self.word)
        sep = "" if compact else " "
        return sep.join(map(str, self.word))

    def __repr__(self) -> str:
        return f"Permutation({self.one_line(compact=False)!r})"


# cycle writings --------------------------------------------------------------


def _rotate(cycle: Sequence[int], to_front: int) -> tuple[int, ...]:
    k = list(cycle).index(to_front)
    return tuple(cycle[k:]) + tuple(cycle[:k])


def arrange_cycles(cycles: Iterable[Sequence[int]], style: CycleStyle) -> list[tuple[int, ...]]:
    """Canonical rotation and order of a set of disjoint cycles (any letters)."""
    cycles = [tuple(c) for c in cycles if len(c)]
    if style is CycleStyle.MAX_LAST_DEC_MAX:
        rot = [_rotate(c, max(c))[1:] + (max(c),) for c in cycles]
        return sorted(rot, key=lambda c: -c[-1])
    if style is CycleStyle.MAX_FIRST_INC_MAX:
        rot = [_rotate(c, max(c)) for c in cycles]
        return sorted(rot, key=lambda c: c[0])
    if style is CycleStyle.MIN_LAST_INC_MIN:
        rot = [_rotate(c, min(c))[1:] + (min(c),) for c in cycles]
        return sorted(rot, key=lambda c: c[-1])
    if style is CycleStyle.MIN_FIRST:
        rot = [_rotate(c, min(c)) for c in cycles]
        return sorted(rot, key=lambda c: c[0])
    raise ValueError(style)


def cycle_form(p: Permutation, style: CycleStyle) -> list[tuple[int, ...]]:
    return arrange_cycles(p.cycles(), style)


def format_cycles(cycles: Iterable[Sequence[int]]) -> str:
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[tuple[int, ...]]:
    """Parse ``"(5 3 7)(6)(1 4)"``; commas are accepted as separators."""
    text = text.strip()
    if not text:
        return []
    if _CYCLE_RE.sub("", text).strip():
        raise DomainError(f"cannot parse cycle form {text!r}")
    out = []
    for body in _CYCLE_RE.findall(text):
        parts = [p for p in re.split(r"[\s,]+", body.strip()) if p]
        if not parts or not all(p.isdigit() for p in parts):
            raise DomainError(f"bad cycle ({body})")
        out.append(tuple(int(p) for p in parts))
    return out


# decorated permutations ------------------------------------------------------


@dataclass(frozen=True)
class DecoratedPermutation:
    """A permutation of [n] whose cycles are colored red or blue."""

    red: tuple[tuple[int, ...], ...]
    blue: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        red = tuple(sorted(arrange_cycles(self.red, CycleStyle.MIN_FIRST)))
        blue = tuple(sorted(arrange_cycles(self.blue, CycleStyle.MIN_FIRST)))
        object.__setattr__(self, "red", red)
        object.__setattr__(self, "blue", blue)
        letters = [a for c in red + blue for a in c]
        if len(set(letters)) != len(letters):
            raise DomainError("red and blue cycles overlap")
        if sorted(letters) != list(range(1, len(letters) + 1)):
            raise DomainError("colored cycles do not cover [n]")

    @property
    def n(self) -> int:
        return sum(map(len, self.red + self.blue))

    @property
    def red_ground(self) -> frozenset[int]:
        return frozenset(a for c in self.red for a in c)

    @property
    def blue_ground(self) -> frozenset[int]:
        return frozenset(a for c in self.blue for a in c)

    def permutation(self) -> Permutation:
        return Permutation.from_cycles(self.red + self.blue, self.n)

    @classmethod
    def colorings(cls, p: Permutation) -> Iterator["DecoratedPermutation"]:
        """All 2^cyc decorations of ``p``, red subsets in a fixed order."""
        cyc = p.cycles()
        for mask in range(1 << len(cyc)):
            red = tuple(c for i, c in enumerate(cyc) if mask >> i & 1)
            blue = tuple(c for i, c in enumerate(cyc) if not mask >> i & 1)
            yield cls(red, blue)

    @classmethod
    def parse(cls, text: str) -> "DecoratedPermutation":
        m = re.fullmatch(r"\s*R:(.*?)\s+B:(.*?)\s*", text)
        if not m:
            raise DomainError(f"cannot parse decorated permutation {text!r}")
        return cls(tuple(parse_cycles(m.group(1))), tuple(parse_cycles(m.group(2))))

    def __str__(self) -> str:
        return f"R:{format_cycles(self.red)} B:{format_cycles(self.blue)}"


def subset_cycles_standardized(cycles: Sequence[Sequence[int]]) -> Permutation:
    """Order-preserving relabelling of a permutation of a subset to one of [k]."""
    letters = sorted(a for c in cycles for a in c)
    rank = {a: i for i, a in enumerate(letters, 1)}
    return Permutation.from_cycles([[rank[a] for a in c] for c in cycles], len(letters))


# statistics ------------------------------------------------------------------


def _neighbors(w: Sequence[int], c: Boundary):
    left = (c.left,) + tuple(w[:-1])
    right = tuple(w[1:]) + (c.right,)
    return left, right


def _shape_sets(w: Sequence[int], c: Boundary) -> dict[Stat, set[int]]:
    val, pk, da, dd = set(), set(), set(), set()
    left, right = _neighbors(w, c)
    for a, l, r in zip(w, left, right):
        if l > a < r:
            val.add(a)
        elif l < a > r:
            pk.add(a)
        elif l < a < r:
            da.add(a)
        else:
            dd.add(a)
    return {Stat.VAL: val, Stat.PK: pk, Stat.DA: da, Stat.DD: dd}


def _lmax(w: Sequence[int]) -> set[int]:
    out, best = set(), 0
    for a in w:
        if a > best:
            out.add(a)
            best = a
    return out


def _rmax(w: Sequence[int]) -> set[int]:
    return _lmax(w[::-1])


def _rmin(w: Sequence[int]) -> set[int]:
    out, best = set(), INF
    for a in reversed(w):
        if a < best:
            out.add(a)
            best = a
    return out


def _cyclic_sets(p: Permutation) -> dict[Stat, set[int]]:
    w, inv = p.word, p.inverse_word
    cpk, cval, cda, cdd = set(), set(), set(), set()
    for i in range(1, len(w) + 1):
        prev, nxt = inv[i - 1], w[i - 1]
        if prev == i:
            continue
        if prev < i > nxt:
            cpk.add(i)
        elif prev > i < nxt:
            cval.add(i)
        elif prev < i < nxt:
            cda.add(i)
        else:
            cdd.add(i)
    return {Stat.CPK: cpk, Stat.CVAL: cval, Stat.CDA: cda, Stat.CDD: cdd}


def stat_set(p: Permutation, s: "Stat | str", c: Boundary | None = None) -> set[int]:
    """The set underlying statistic ``s``; its size is the statistic's value.

    Position statistics (des, asc, suc, basc) return positions; index
    statistics (exc, drop, fix, cpk, cval, cda, cdd, fixHat) return indices of
    [n]; letter statistics return letters.  ``cyc`` returns the least letter of
    each cycle.  ``c`` defaults to the 0-0 boundary and only affects the
    shape statistics and their composites.
    """
    s = Stat.parse(s)
    c = Boundary.ZERO_ZERO if c is None else c
    w = p.word
    n = len(w)
    if s in FUNCTIONAL:
        p.require_standard()
    if s is Stat.DES:
        return {i for i in range(1, n) if w[i - 1] > w[i]}
    if s is Stat.ASC:
        return {i for i in range(1, n) if w[i - 1] < w[i]}
    if s is Stat.SUC:
        return {i for i in range(1, n) if w[i] == w[i - 1] + 1}
    if s is Stat.BASC:
        return {i for i in range(1, n) if w[i] >= w[i - 1] + 2}
    if s is Stat.SUCB:
        return {w[i] for i in range(1, n) if w[i] == w[i - 1] + 1}
    if s is Stat.DESB:
        return {w[i] for i in range(1, n) if w[i] < w[i - 1]}
    if s is Stat.BASCB:
        return {w[i] for i in range(1, n) if w[i] > w[i - 1] + 1}
    if s is Stat.EXC:
        return {i for i in range(1, n + 1) if w[i - 1] > i}
    if s is Stat.DROP:
        return {i for i in range(1, n + 1) if w[i - 1] < i}
    if s is Stat.FIX:
        return {i for i in range(1, n + 1) if w[i - 1] == i}
    if s is Stat.FIXHAT:
        return {i for i in range(2, n + 1) if w[i - 1] == i}
    if s is Stat.EXCHAT:
        return {w[i - 1] for i in range(2, n + 1) if w[i - 1] > i}
    if s is Stat.DROPV:
        return {w[i - 1] for i in range(1, n + 1) if w[i - 1] < i}
    if s is Stat.CYC:
        return {cyc[0] for cyc in p.cycles()}
    if s in (Stat.CPK, Stat.CVAL, Stat.CDA, Stat.CDD):
        return _cyclic_sets(p)[s]
    if s is Stat.LMAX:
        return _lmax(w)
    if s is Stat.RMAX:
        return _rmax(w)
    if s is Stat.RMIN:
        return _rmin(w)
    shapes = _shape_sets(w, c)
    if s in shapes:
        return shapes[s]
    if s is Stat.LMAXPK:
        return _lmax(w) & shapes[Stat.PK]
    if s is Stat.RMAXPK:
        return _rmax(w) & shapes[Stat.PK]
    if s is Stat.LMAXDA:
        return _lmax(w) & shapes[Stat.DA]
    if s is Stat.RMAXDD:
        return _rmax(w) & shapes[Stat.DD]
    if s is Stat.RMINDA:
        return _rmin(w) & shapes[Stat.DA]
    raise ValueError(f"unknown statistic {s!r}")  # pragma: no cover


def stat_count(p: Permutation, s: "Stat | str", c: Boundary | None = None) -> int:
    s = Stat.parse(s)
    if s is Stat.CYC:
        return len(p.cycles())
    return len(stat_set(p, s, c))


def stat_counts(
    p: Permutation, stats: Iterable["Stat | str | tuple[Stat | str, Boundary]"]
) -> tuple[int, ...]:
    """Counts of several statistics, sharing the work between them.

    Each entry is a statistic or a ``(statistic, boundary)`` pair.
    """
    w = p.word
    shape_cache: dict[Boundary, dict] = {}
    lm = rm = rmn = cyclic = None
    out = []
    for entry in stats:
        if isinstance(entry, tuple):
            s, c = Stat.parse(entry[0]), entry[1]
        else:
            s, c = Stat.parse(entry), Boundary.ZERO_ZERO
        if s in SHAPED:
            if c not in shape_cache:
                shape_cache[c] = _shape_sets(w, c)
            sh = shape_cache[c]
            if s in sh:
                out.append(len(sh[s]))
                continue
            if lm is None:
                lm, rm, rmn = _lmax(w), _rmax(w), _rmin(w)
            base, shape = {
                Stat.LMAXPK: (lm, Stat.PK),
                Stat.RMAXPK: (rm, Stat.PK),
                Stat.LMAXDA: (lm, Stat.DA),
                Stat.RMAXDD: (rm, Stat.DD),
                Stat.RMINDA: (rmn, Stat.DA),
            }[s]
            out.append(len(base & sh[shape]))
        elif s in (Stat.CPK, Stat.CVAL, Stat.CDA, Stat.CDD):
            if cyclic is None:
                p.require_standard()
                cyclic = _cyclic_sets(p)
            out.append(len(cyclic[s]))
        else:
            out.append(stat_count(p, s, c))
    return tuple(out)


# factorizations --------------------------------------------------------------


def _split_runs(w: Sequence[int], x: int, keep: Callable[[int], bool]):
    if x not in w:
        raise DomainError(f"letter {x} not in word")
    w = tuple(w)
    i = w.index(x)
    j = i
    while j > 0 and keep(w[j - 1]):
        j -= 1
    k = i + 1
    while k < len(w) and keep(w[k]):
        k += 1
    return w[:j], w[j:i], x, w[i + 1:k], w[k:]


def hop_factorization(w: "Permutation | Sequence[int]", x: int):
    """``w = w1 w2 x w4 w5`` with w2, w4 the maximal runs of letters below x."""
    w = w.word if isinstance(w, Permutation) else w
    return _split_runs(w, x, lambda a: a < x)


def andre_x_factorization(w: "Permutation | Sequence[int]", x: int):
    """``w = u lam x rho v`` with lam, rho the maximal runs of letters above x."""
    w = w.word if isinstance(w, Permutation) else w
    return _split_runs(w, x, lambda a: a > x)


# families --------------------------------------------------------------------


def standardize(w: "Permutation | Sequence[int]") -> Permutation:
    """Replace letters by their ranks, giving a permutation of [n]."""
    w = w.word if isinstance(w, Permutation) else tuple(w)
    rank = {a: i for i, a in enumerate(sorted(w), 1)}
    return Permutation(tuple(rank[a] for a in w))


def is_in_m(p: Permutation) -> bool:
    """True when the first descent, if any, starts at the largest letter."""
    w = p.word
    for i in range(len(w) - 1):
        if w[i] > w[i + 1]:
            return w[i] == max(w)
    return True


def all_permutations(
    domain: str = "S",
    n: int = 0,
    where: Callable[[Permutation], bool] | None = None,
) -> Iterator[Permutation]:
    """Members of a permutation family on [n] in lexicographic order.

    ``domain`` is ``"S"`` (all permutations) or ``"M"`` (first descent at the
    letter n); ``where`` is an optional extra filter.
    """
    domain = domain.upper().removesuffix("N") if domain not in ("S", "M") else domain
    if domain not in ("S", "M"):
        raise ValueError(f"unknown domain {domain!r}")
    for w in itertools.permutations(range(1, n + 1)):
        p = Permutation(w)
        if domain == "M" and not is_in_m(p):
            continue
        if where is not None and not where(p):
            continue
        yield p
