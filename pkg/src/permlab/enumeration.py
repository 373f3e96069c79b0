"""Brute-force generating polynomials over permutation families.

The engine walks a family once, tallies the requested statistic vectors in a
:class:`collections.Counter`, and only then turns the tally into a polynomial.
Weights that are not plain monomials (such as ``(a*u3 + b*u4)**fix``) are
applied per distinct statistic vector, so the cost is dominated by the walk.
"""

from __future__ import annotations

import enum
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable, Mapping

from .perm import Boundary, DomainError, Permutation, Stat, is_in_m, stat_counts
from .poly import MPoly

__all__ = [
    "DEFAULT_MAX_N",
    "max_n",
    "BoundError",
    "InvariantError",
    "Constraint",
    "StatTerm",
    "StatSpec",
    "Family",
    "stat_distribution",
    "cached_distribution",
    "polynomial_from_distribution",
    "generating_polynomial",
    "named_polynomial",
    "family_spec",
    "PREDICATES",
]

DEFAULT_MAX_N = 9
X, Y, T, A, B = MPoly.vars("x y t a b")
U1, U2, U3, U4, F, G = MPoly.vars("u1 u2 u3 u4 f g")


class BoundError(ValueError):
    """Requested size exceeds the configured safety bound."""


class InvariantError(ArithmeticError):
    """A statistic offset drove an exponent negative."""


def max_n() -> int:
    """Safety bound on exhaustive enumeration; ``PERMLAB_MAX_N`` overrides it."""
    env = os.environ.get("PERMLAB_MAX_N")
    return int(env) if env else DEFAULT_MAX_N


def _check_bound(n: int) -> None:
    if n > max_n():
        raise BoundError(f"n={n} exceeds the enumeration bound {max_n()} (set PERMLAB_MAX_N)")


# predicates are referenced by name so that specs stay picklable ---------------


def _first_is_max(p: Permutation) -> bool:
    return not p.word or p.word[0] == len(p.word)


def _andre(kind: int) -> Callable[[Permutation], bool]:
    def pred(p: Permutation) -> bool:
        from .andre import is_andre

        return is_andre(p.word, kind)

    return pred


def _cycle_andre(p: Permutation) -> bool:
    from .andre import is_cycle_andre

    return is_cycle_andre(p)


def _cycle_up_down(p: Permutation) -> bool:
    from .andre import is_cycle_up_down

    return is_cycle_up_down(p)


PREDICATES: dict[str, Callable[[Permutation], bool]] = {
    "in_m": is_in_m,
    "first_is_max": _first_is_max,
    "andre1": _andre(1),
    "andre2": _andre(2),
    "cycle_andre": _cycle_andre,
    "cycle_up_down": _cycle_up_down,
}


@dataclass(frozen=True)
class Constraint:
    """Either ``stat == value`` (under a boundary) or a named predicate."""

    stat: Stat | None = None
    value: int | None = None
    boundary: Boundary = Boundary.ZERO_ZERO
    predicate: str | None = None

    def holds(self, p: Permutation) -> bool:
        if self.predicate is not None:
            return PREDICATES[self.predicate](p)
        return stat_counts(p, [(self.stat, self.boundary)])[0] == self.value


def where(stat: str, value: int, boundary: Boundary = Boundary.ZERO_ZERO) -> Constraint:
    return Constraint(Stat.parse(stat), value, boundary)


def pred(name: str) -> Constraint:
    if name not in PREDICATES:
        raise ValueError(f"unknown predicate {name!r}")
    return Constraint(predicate=name)


@dataclass(frozen=True)
class StatTerm:
    stat: Stat
    var: str
    offset: int = 0
    boundary: Boundary = Boundary.ZERO_ZERO


@dataclass(frozen=True)
class StatSpec:
    """Exponent pattern ``prod var_i ** (stat_i + offset_i)`` over a family."""

    terms: tuple[StatTerm, ...]
    domain: str = "S"
    n: int = 0
    constraints: tuple[Constraint, ...] = field(default_factory=tuple)

    @classmethod
    def build(
        cls,
        terms: Iterable[tuple],
        domain: str = "S",
        n: int = 0,
        constraints: Iterable[Constraint] = (),
    ) -> "StatSpec":
        ts = []
        for t in terms:
            stat, var, *rest = t
            offset = rest[0] if rest else 0
            boundary = rest[1] if len(rest) > 1 else Boundary.ZERO_ZERO
            ts.append(StatTerm(Stat.parse(stat), var, offset, boundary))
        return cls(tuple(ts), domain, n, tuple(constraints))

    def stats(self) -> list[tuple[Stat, Boundary]]:
        return [(t.stat, t.boundary) for t in self.terms]


# the walk --------------------------------------------------------------------


def _walk(args) -> Counter:
    domain, n, stats, constraints, first = args
    tally: Counter = Counter()
    rest = [a for a in range(1, n + 1) if a != first]
    heads = [first] if first is not None else []
    pool = rest if first is not None else list(range(1, n + 1))
    for tail in permutations(pool):
        p = Permutation(tuple(heads) + tail)
        if domain == "M" and not is_in_m(p):
            continue
        if not all(c.holds(p) for c in constraints):
            continue
        tally[stat_counts(p, stats)] += 1
    return tally


def stat_distribution(
    domain: str,
    n: int,
    stats: Iterable,
    constraints: Iterable[Constraint] = (),
    jobs: int = 1,
) -> Counter:
    """Counter mapping statistic vectors to the number of family members."""
    _check_bound(n)
    stats = [
        (Stat.parse(s[0]), s[1]) if isinstance(s, tuple) else (Stat.parse(s), Boundary.ZERO_ZERO)
        for s in stats
    ]
    constraints = tuple(constraints)
    domain = domain.upper()
    if domain not in ("S", "M"):
        raise ValueError(f"unknown domain {domain!r}")
    if jobs <= 1 or n < 2:
        return _walk((domain, n, stats, constraints, None))
    # partition by first letter; partial tallies add up independently of the split
    tasks = [(domain, n, stats, constraints, a) for a in range(1, n + 1)]
    total: Counter = Counter()
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        for part in ex.map(_walk, tasks):
            total.update(part)
    return total


@lru_cache(maxsize=256)
def cached_distribution(
    domain: str, n: int, stats: tuple, constraints: tuple[Constraint, ...] = ()
) -> Counter:
    """Memoised :func:`stat_distribution`; callers must not mutate the result."""
    return stat_distribution(domain, n, stats, constraints)


def polynomial_from_distribution(
    dist: Mapping[tuple, int], weight: Callable[..., MPoly]
) -> MPoly:
    acc = MPoly()
    for vec in sorted(dist):
        acc = acc + dist[vec] * weight(*vec)
    return acc


def generating_polynomial(spec: StatSpec, jobs: int = 1) -> MPoly:
    dist = stat_distribution(spec.domain, spec.n, spec.stats(), spec.constraints, jobs)
    terms: dict[int, int] = {}
    for vec, count in dist.items():
        exps: dict[str, int] = {}
        for term, value in zip(spec.terms, vec):
            e = value + term.offset
            if e < 0:
                culprit = _find_member(spec, vec)
                raise InvariantError(
                    f"exponent {term.stat.value}{term.offset:+d} is negative for {culprit}"
                )
            exps[term.var] = exps.get(term.var, 0) + e
        k = MPoly.key(exps)
        terms[k] = terms.get(k, 0) + count
    return MPoly(terms)


def _find_member(spec: StatSpec, vec: tuple) -> Permutation | None:
    from .perm import all_permutations

    for p in all_permutations(spec.domain, spec.n):
        if all(c.holds(p) for c in spec.constraints) and stat_counts(p, spec.stats()) == vec:
            return p
    return None


# named families --------------------------------------------------------------


class Family(str, enum.Enum):
    ACYC = "acyc"
    A9 = "a9"
    AXYT = "axyt"
    ATILDE = "atilde"
    EULER_EXC = "euler_exc"
    EULER_ASC = "euler_asc"
    AHAT = "ahat"
    FSUC = "fsuc"
    GCYC = "gcyc"
    GLIN = "glin"
    DSTAR = "dstar"
    MASTER2_RHS = "master2_rhs"
    CYC4 = "cyc4"
    LIN4 = "lin4"
    LIN4_M = "lin4_m"

    @classmethod
    def parse(cls, name: "str | Family") -> "Family":
        if isinstance(name, Family):
            return name
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown family {name!r}") from None


ZZ = Boundary.ZERO_ZERO
IZ = Boundary.INF_ZERO

_LINEAR_SHAPE = [("lmaxda", "t"), ("rmaxdd", "t"), ("lmax", "a", -1), ("rmax", "a", -1)]


def family_spec(family: "Family | str", n: int) -> StatSpec:
    """The exponent pattern and domain behind each monomial-weighted family."""
    family = Family.parse(family)
    if family is Family.ACYC:
        return StatSpec.build([("exc", "x"), ("drop", "y"), ("fix", "t"), ("cyc", "a")], "S", n)
    if family is Family.A9:
        return StatSpec.build(
            [
                ("val", "u1"), ("val", "u2"), ("da", "u3"), ("dd", "u4"),
                ("lmaxpk", "f", -1), ("rmaxpk", "g", -1),
                ("lmaxda", "t"), ("rmaxdd", "t"), ("lmax", "a", -1), ("rmax", "b", -1),
            ],
            "S", n + 1,
        )
    if family is Family.AXYT:
        return StatSpec.build([("asc", "x"), ("des", "y")] + _LINEAR_SHAPE, "S", n + 1)
    if family is Family.ATILDE:
        return StatSpec.build([("asc", "x"), ("des", "y")] + _LINEAR_SHAPE, "M", n + 1)
    if family is Family.AHAT:
        return StatSpec.build(
            [("asc", "x"), ("des", "y"), ("rmaxdd", "t"), ("rmax", "a", -1)],
            "M", n + 1, [pred("first_is_max")],
        )
    if family is Family.FSUC:
        return StatSpec.build([("excHat", "x"), ("drop", "y"), ("fixHat", "t"), ("cyc", "a")], "S", n)
    if family is Family.GCYC:
        return StatSpec.build([("exc", "x"), ("fix", "t"), ("cyc", "a")], "S", n, [where("cda", 0)])
    if family is Family.GLIN:
        return StatSpec.build(
            [("asc", "x"), ("lmax", "a", -1), ("rmax", "a", -1), ("rmaxdd", "t")],
            "S", n + 1, [where("da", 0)],
        )
    if family is Family.DSTAR:
        return StatSpec.build([("des", "x"), ("lmax", "a", -1)], "S", n + 1, [pred("andre1")])
    if family is Family.CYC4:
        return StatSpec.build(
            [("cpk", "u1"), ("cpk", "u2"), ("cda", "u3"), ("cdd", "u4"), ("fix", "t"), ("cyc", "a")],
            "S", n,
        )
    if family in (Family.LIN4, Family.LIN4_M):
        return StatSpec.build(
            [("val", "u1"), ("val", "u2"), ("da", "u3"), ("dd", "u4")] + _LINEAR_SHAPE,
            "S" if family is Family.LIN4 else "M", n + 1,
        )
    raise ValueError(f"family {family.value} is not monomial-weighted")


def _euler(family: Family, n: int, k: int) -> MPoly:
    if n == 0 or k == 0:
        return MPoly.const(1 if n == k else 0)
    if not 1 <= k <= n:
        raise ValueError(f"invalid Eulerian index ({n}, {k})")
    if family is Family.EULER_EXC:
        dist = stat_distribution("S", n, ["exc", "cyc", "fix"])
        return polynomial_from_distribution(
            {v: c for v, c in dist.items() if v[0] == n - k},
            lambda exc, cyc, fix: A ** cyc * T ** fix,
        )
    # rmaxdd is read with an infinite letter in front: the word is what
    # remains after deleting the leading maximum of a member of M_{n+1}
    dist = stat_distribution("S", n, ["asc", "rmax", ("rmaxdd", IZ)])
    return polynomial_from_distribution(
        {v: c for v, c in dist.items() if v[0] == n - k},
        lambda asc, rmax, rmaxdd: A ** rmax * T ** rmaxdd,
    )


@lru_cache(maxsize=None)
def _named(family: Family, n: int, k: int | None, bound: int) -> MPoly:
    if family in (Family.EULER_EXC, Family.EULER_ASC):
        if k is None:
            raise ValueError("Eulerian-number families need k")
        return _euler(family, n, k)
    if family is Family.MASTER2_RHS:
        dist = stat_distribution("S", n, ["exc", "drop", "fix", "cyc"])
        return polynomial_from_distribution(
            dist,
            lambda exc, drop, fix, cyc: X ** exc * Y ** drop * T ** fix
            * (A * U3 + B * U4) ** fix * (A * F + B * G) ** (cyc - fix),
        )
    return generating_polynomial(family_spec(family, n))


def named_polynomial(family: "Family | str", n: int, k: int | None = None) -> MPoly:
    """Polynomial of a named family; results are cached per process."""
    family = Family.parse(family)
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_bound(n + (1 if family in _SHIFTED else 0))
    return _named(family, n, k, max_n())


_SHIFTED = frozenset(
    {Family.A9, Family.AXYT, Family.ATILDE, Family.AHAT, Family.GLIN, Family.DSTAR, Family.LIN4, Family.LIN4_M}
)

