"""Gamma expansions in the basis (xy)^j (x+y)^(n-2j), the normalised
coefficients d_{n,j} = gamma_{n,j} / 2^j, their combinatorial models, and the
recurrences they satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable

from .enumeration import (
    Family,
    InvariantError,
    cached_distribution,
    named_polynomial,
    pred,
)
from .perm import DomainError
from .poly import MPoly
from .verdict import Verdict

__all__ = [
    "GammaExpansion",
    "gamma_expand",
    "d_coeffs",
    "gamma_table",
    "gamma_models",
    "d_models",
    "peak_model_ab",
    "dlp_sides",
    "derangement_model",
    "euler_polys",
    "recurrence_check",
    "RECURRENCES",
]

X, Y, T, A, B = MPoly.vars("x y t a b")


@dataclass(frozen=True)
class GammaExpansion:
    n: int
    coeffs: tuple[MPoly, ...]
    basis: str = "homogeneous-(xy,x+y)"
    xvar: str = "x"
    yvar: str = "y"

    def recombine(self) -> MPoly:
        x, y = MPoly.var(self.xvar), MPoly.var(self.yvar)
        acc = MPoly()
        for j, g in enumerate(self.coeffs):
            acc = acc + g * (x * y) ** j * (x + y) ** (self.n - 2 * j)
        return acc

    def is_positive(self) -> bool:
        """Every gamma coefficient has nonnegative integer coefficients."""
        return all(g.is_integral() and g.is_nonnegative() for g in self.coeffs)


def _check_form(h: MPoly, n: int, xv: str, yv: str) -> None:
    ix, iy = _pos(xv), _pos(yv)
    for exps, _ in h.terms():
        if exps[ix] + exps[iy] != n:
            raise DomainError(f"polynomial is not homogeneous of degree {n} in {xv},{yv}")
    if h.swap(xv, yv) != h:
        raise DomainError(f"polynomial is not symmetric in {xv},{yv}")


def _pos(name: str) -> int:
    from .poly import VARS

    return VARS.index(name)


def gamma_expand(h: MPoly, n: int, xvar: str = "x", yvar: str = "y") -> GammaExpansion:
    """Solve a_k = sum_j C(n-2j, k-j) gamma_j (unit lower triangular) and verify
    that the recombination reproduces ``h`` exactly."""
    _check_form(h, n, xvar, yvar)
    a = [h.coeff(xvar, k).coeff(yvar, n - k) for k in range(n // 2 + 1)]
    gam: list[MPoly] = []
    for j in range(n // 2 + 1):
        g = a[j]
        for i in range(j):
            g = g - comb(n - 2 * i, j - i) * gam[i]
        gam.append(g)
    out = GammaExpansion(n, tuple(gam), xvar=xvar, yvar=yvar)
    residual = h - out.recombine()
    if residual:
        raise InvariantError(f"gamma recombination leaves residual {residual} at n={n}")
    return out


def d_coeffs(g: GammaExpansion) -> list[MPoly]:
    """gamma_j / 2^j, which must be exact."""
    out = []
    for j, gj in enumerate(g.coeffs):
        dj = gj / (2 ** j)
        if not dj.is_integral():
            raise InvariantError(f"gamma_{g.n},{j} = {gj} is not divisible by 2^{j}")
        out.append(dj)
    return out


def gamma_table(family: str, n: int, t1: bool = False) -> GammaExpansion:
    """Gamma expansion of the (alpha,t)-binomial-Eulerian (``atilde``) or the
    (alpha,t)-Eulerian (``axyt``) polynomial."""
    fam = Family.parse(family)
    if fam not in (Family.ATILDE, Family.AXYT):
        raise ValueError("gamma tables exist for atilde and axyt only")
    h = named_polynomial(fam, n)
    if t1:
        h = h.substitute({"t": 1})
    return gamma_expand(h, n)


# combinatorial models ------------------------------------------------------------

_LIN = ("asc", "des", "da", "dd", "pk", "lmax", "rmax", "lmaxda", "rmaxdd")
_CYC = ("exc", "drop", "cda", "cdd", "cpk", "fix", "cyc")


def _lin(domain: str, n: int):
    return [dict(zip(_LIN, v)) | {"#": c} for v, c in cached_distribution(domain, n + 1, _LIN).items()]


def _cyc(n: int):
    return [dict(zip(_CYC, v)) | {"#": c} for v, c in cached_distribution("S", n, _CYC).items()]


def _sum(rows, keep: Callable[[dict], bool], weight: Callable[[dict], MPoly]) -> MPoly:
    acc = MPoly()
    for r in rows:
        if keep(r):
            acc = acc + r["#"] * weight(r)
    return acc


def _scale(p: MPoly, n: int, j: int) -> MPoly:
    # 2^(2j-n) with 2j <= n
    return p / (2 ** (n - 2 * j))


def gamma_models(kind: str, n: int, j: int) -> dict[str, MPoly]:
    """Each combinatorial model of the j-th gamma coefficient.

    ``kind="tilde"`` is the binomial-Eulerian family over the set M,
    ``kind="lin"`` the (alpha,t)-Eulerian family over all permutations.
    Model names: ``1a 1b 2a 2b 3a 3b`` (linear a, cyclic b).
    """
    two = MPoly.const(2)
    lm = lambda r: A ** (r["lmax"] + r["rmax"] - 2)  # noqa: E731
    cyc = _cyc(n)
    if kind == "tilde":
        lin = _lin("M", n)
        return {
            "1a": _sum(lin, lambda r: r["da"] == 0 and r["asc"] == j,
                       lambda r: A ** (r["rmax"] - 1) * T ** r["rmaxdd"]),
            "1b": _sum(cyc, lambda r: r["cda"] == 0 and r["exc"] == j,
                       lambda r: A ** r["cyc"] * T ** r["fix"]),
            "2a": _sum(lin, lambda r: r["dd"] == 0 and r["des"] == j,
                       lambda r: lm(r) * T ** r["lmaxda"]),
            "2b": _sum(cyc, lambda r: r["cdd"] == 0 and r["drop"] == j,
                       lambda r: A ** r["cyc"] * T ** r["fix"]),
            # j valleys means j+1 peaks under the 0-0 boundary
            "3a": _scale(_sum(lin, lambda r: r["pk"] == j + 1,
                              lambda r: lm(r) * T ** (r["lmaxda"] + r["rmaxdd"])), n, j),
            "3b": _scale(_sum(cyc, lambda r: r["cpk"] == j,
                              lambda r: A ** r["cyc"] * (two * T) ** r["fix"]), n, j),
        }
    if kind == "lin":
        lin = _lin("S", n)
        return {
            "1a": _sum(lin, lambda r: r["da"] == 0 and r["asc"] == j,
                       lambda r: lm(r) * T ** r["rmaxdd"]),
            "1b": _sum(cyc, lambda r: r["cda"] == 0 and r["exc"] == j,
                       lambda r: two ** (r["cyc"] - r["fix"]) * A ** r["cyc"] * T ** r["fix"]),
            "2a": _sum(lin, lambda r: r["dd"] == 0 and r["des"] == j,
                       lambda r: lm(r) * T ** r["lmaxda"]),
            "2b": _sum(cyc, lambda r: r["cdd"] == 0 and r["drop"] == j,
                       lambda r: two ** (r["cyc"] - r["fix"]) * A ** r["cyc"] * T ** r["fix"]),
            "3a": _scale(_sum(lin, lambda r: r["pk"] == j + 1,
                              lambda r: lm(r) * T ** (r["lmaxda"] + r["rmaxdd"])), n, j),
            "3b": _scale(_sum(cyc, lambda r: r["cpk"] == j,
                              lambda r: (two * A) ** r["cyc"] * T ** r["fix"]), n, j),
        }
    raise ValueError("kind must be 'tilde' or 'lin'")


def _pk_ab_rows(n: int):
    stats = ("pk", "lmax", "rmax", "lmaxda", "rmaxdd")
    return [dict(zip(stats, v)) | {"#": c} for v, c in cached_distribution("S", n + 1, stats).items()]


def peak_model_ab(n: int, j: int) -> MPoly:
    """2^(2j-n) times the peak sum weighted by a^(lmax-1) b^(rmax-1)."""
    rows = _pk_ab_rows(n)
    s = _sum(rows, lambda r: r["pk"] == j + 1,
             lambda r: A ** (r["lmax"] - 1) * B ** (r["rmax"] - 1) * T ** (r["lmaxda"] + r["rmaxdd"]))
    return _scale(s, n, j)


def dlp_sides(n: int, j: int) -> tuple[MPoly, MPoly]:
    """Both sides of the two-parameter peak identity: the (a, b) weighting and
    the symmetrised ((a+b)/2)^(lmax+rmax-2) weighting."""
    rows = _pk_ab_rows(n)
    half = (A + B) / 2
    left = _sum(rows, lambda r: r["pk"] == j + 1,
                lambda r: A ** (r["lmax"] - 1) * B ** (r["rmax"] - 1) * T ** (r["lmaxda"] + r["rmaxdd"]))
    right = _sum(rows, lambda r: r["pk"] == j + 1,
                 lambda r: half ** (r["lmax"] + r["rmax"] - 2) * T ** (r["lmaxda"] + r["rmaxdd"]))
    return left, right


def derangement_model(n: int) -> MPoly:
    """Sum over derangements with no cyclic double ascent of
    a^cyc (xy)^exc (x+y)^(n-2 exc)."""
    return _sum(_cyc(n), lambda r: r["cda"] == 0 and r["fix"] == 0,
                lambda r: A ** r["cyc"] * (X * Y) ** r["exc"] * (X + Y) ** (n - 2 * r["exc"]))


_D_STATS = ("des", "rminda", "rmin", "lmax")


def d_models(n: int, j: int) -> dict[str, MPoly]:
    """Models of d_{n,j}: cycle André permutations of [n] by drop, André
    permutations of both kinds of [n+1] by des, and the lmax model (t=1)."""
    web_stats = ("drop", "fix", "cyc")
    web = cached_distribution("S", n, web_stats, (pred("cycle_andre"),))
    out = {
        "web": MPoly.from_terms(
            ({"t": v[1], "a": v[2]}, c) for v, c in web.items() if v[0] == j
        ),
    }
    for kind in (1, 2):
        dist = cached_distribution("S", n + 1, _D_STATS, (pred(f"andre{kind}"),))
        out[f"andre{kind}"] = MPoly.from_terms(
            ({"t": v[1], "a": v[2] - 1}, c) for v, c in dist.items() if v[0] == j
        )
    dist = cached_distribution("S", n + 1, _D_STATS, (pred("andre1"),))
    out["lmax"] = MPoly.from_terms(({"a": v[3] - 1}, c) for v, c in dist.items() if v[0] == j)
    return out


# recurrences -----------------------------------------------------------------------


def _a_nk(n: int) -> list[MPoly]:
    h = named_polynomial(Family.AXYT, n).substitute({"t": 1, "x": 1})
    return [h.coeff("y", k) for k in range(n + 1)]


def _gamma_t1(n: int) -> list[MPoly]:
    return list(gamma_table("axyt", n, t1=True).coeffs)


def _at(seq: list, i: int) -> MPoly:
    return seq[i] if 0 <= i < len(seq) else MPoly()


def _check_two_term(name, n_max, values, coef_same, coef_prev, width):
    """Check v(n+1, k) = c1(n,k) v(n,k) + c2(n,k) v(n,k-1)."""
    cache = {0: [MPoly.const(1)]}
    for n in range(1, n_max + 1):
        cache[n] = values(n)
    for n in range(n_max):
        for k in range(width(n + 1) + 1):
            lhs = _at(cache[n + 1], k)
            rhs = coef_same(n, k) * _at(cache[n], k) + coef_prev(n, k) * _at(cache[n], k - 1)
            if lhs != rhs:
                return Verdict.fail(name, f"n={n + 1}, k={k}", rhs, lhs)
    return Verdict(name, True, f"checked n <= {n_max}")


def _rec_a(n_max: int) -> Verdict:
    return _check_two_term(
        "rec:A_nk", n_max, _a_nk,
        lambda n, k: A + k, lambda n, k: A + (n + 1 - k), lambda n: n,
    )


def _rec_gamma(n_max: int) -> Verdict:
    return _check_two_term(
        "rec:gamma", n_max, _gamma_t1,
        lambda n, j: A + j, lambda n, j: MPoly.const(2 * (n + 2 - 2 * j)), lambda n: n // 2,
    )


def _rec_d(n_max: int) -> Verdict:
    return _check_two_term(
        "rec:d", n_max, lambda n: d_coeffs(gamma_table("axyt", n, t1=True)),
        lambda n, j: A + j, lambda n, j: MPoly.const(n + 2 - 2 * j), lambda n: n // 2,
    )


def euler_polys(n: int) -> MPoly:
    """E_n(x): André permutations of the first kind of [n] by descents."""
    if n == 0:
        return MPoly.const(1)
    dist = cached_distribution("S", n, ("des",), (pred("andre1"),))
    return MPoly.from_terms(({"x": v[0]}, c) for v, c in dist.items())


def _rec_e(n_max: int) -> Verdict:
    # E_{n+2} = E_{n+1} + x sum_{j=1}^{n} C(n,j) E_j E_{n+1-j}
    E = [euler_polys(m) for m in range(n_max + 3)]
    for n in range(n_max + 1):
        rhs = E[n + 1] + X * sum(
            (comb(n, j) * E[j] * E[n + 1 - j] for j in range(1, n + 1)), MPoly()
        )
        if E[n + 2] != rhs:
            return Verdict.fail("recurrence-x", f"n={n}", rhs, E[n + 2])
    return Verdict("recurrence-x", True, f"checked E_n for n <= {n_max + 2}")


def _rec_sff(n_max: int) -> Verdict:
    # x F_{n+1} = A^cyc_{n+1} + a (x - t) A^cyc_n
    for n in range(n_max + 1):
        lhs = X * named_polynomial(Family.FSUC, n + 1)
        acyc_n = named_polynomial(Family.ACYC, n) if n else MPoly.const(1)
        rhs = named_polynomial(Family.ACYC, n + 1) + A * (X - T) * acyc_n
        if lhs != rhs:
            return Verdict.fail("sff", f"n={n}", rhs, lhs)
    return Verdict("sff", True, f"checked n <= {n_max}")


RECURRENCES: dict[str, Callable[[int], Verdict]] = {
    "A_nk": _rec_a,
    "gamma": _rec_gamma,
    "d": _rec_d,
    "E": _rec_e,
    "sff": _rec_sff,
}


def recurrence_check(kind: str, n_max: int) -> Verdict:
    if kind not in RECURRENCES:
        raise ValueError(f"unknown recurrence {kind!r}; choose from {sorted(RECURRENCES)}")
    return RECURRENCES[kind](n_max)

