"""Truncated power series in z over exact polynomial coefficients.

:class:`Series` stores ordinary coefficients c_0..c_N; an exponential
generating function sum a_n z^n/n! is held as c_n = a_n/n!.  Radicals such as
sqrt(1-4x) never appear: trigonometric blocks are built from their even parts,
whose coefficients are polynomials in theta^2.

Symbolic exponents (``F ** alpha``) are computed as ``exp(alpha * log F)``,
which keeps alpha as a polynomial variable.  Identity checks also evaluate
both sides with alpha (and the other exponent symbols) set to small integers,
which exercises integer powering and inversion separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .enumeration import Family, cached_distribution, named_polynomial, pred
from .gamma import d_coeffs, euler_polys, gamma_table
from .poly import MPoly
from .verdict import Verdict

__all__ = [
    "Series",
    "SeriesError",
    "even_trig",
    "jfraction",
    "E_series",
    "K_series",
    "IDENTITIES",
    "check_identity",
    "egf_from_polys",
]

Scalar = Union[MPoly, int, Fraction]

X, Y, T, A, B = MPoly.vars("x y t a b")
U1, U2, U3, U4, F, G = MPoly.vars("u1 u2 u3 u4 f g")


class SeriesError(ValueError):
    """Precondition of a series operation violated."""


def _p(c: Scalar) -> MPoly:
    return c if isinstance(c, MPoly) else MPoly.const(c)


@dataclass(frozen=True)
class Series:
    coeffs: tuple[MPoly, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise SeriesError("a series needs at least the constant coefficient")

    # construction -------------------------------------------------------------

    @classmethod
    def of(cls, coeffs: Iterable[Scalar], order: int | None = None) -> "Series":
        cs = [_p(c) for c in coeffs]
        if order is not None:
            cs = (cs + [MPoly()] * (order + 1))[: order + 1]
        return cls(tuple(cs))

    @classmethod
    def const(cls, c: Scalar, order: int) -> "Series":
        return cls.of([c], order)

    @classmethod
    def z(cls, order: int) -> "Series":
        return cls.of([0, 1], order)

    @classmethod
    def egf(cls, values: Sequence[Scalar], order: int | None = None) -> "Series":
        """From a_0..a_N with the series sum a_n z^n / n!."""
        return cls.of([_p(a) / factorial(n) for n, a in enumerate(values)], order)

    @classmethod
    def exp_linear(cls, c: Scalar, order: int) -> "Series":
        """exp(c z)."""
        c = _p(c)
        out, term = [], MPoly.const(1)
        for n in range(order + 1):
            out.append(term / factorial(n))
            term = term * c
        return cls(tuple(out))

    # access -------------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> MPoly:
        return self.coeffs[n]

    def egf_coeffs(self) -> list[MPoly]:
        return [c * factorial(n) for n, c in enumerate(self.coeffs)]

    def truncate(self, order: int) -> "Series":
        return Series.of(self.coeffs, order)

    def map(self, fn: Callable[[MPoly], MPoly]) -> "Series":
        return Series(tuple(fn(c) for c in self.coeffs))

    def substitute(self, bindings: Mapping[str, Scalar]) -> "Series":
        return self.map(lambda c: c.substitute(bindings))

    # arithmetic -----------------------------------------------------------------

    def _other(self, other) -> "Series":
        if isinstance(other, Series):
            if other.order != self.order:
                n = min(self.order, other.order)
                return other.truncate(n)
            return other
        return Series.const(other, self.order)

    def _aligned(self, other) -> tuple["Series", "Series"]:
        other = self._other(other)
        n = min(self.order, other.order)
        return self.truncate(n), other.truncate(n)

    def __add__(self, other) -> "Series":
        a, b = self._aligned(other)
        return Series(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return self.map(lambda c: -c)

    def __sub__(self, other) -> "Series":
        return self + (-self._other(other))

    def __rsub__(self, other) -> "Series":
        return (-self) + other

    def __mul__(self, other) -> "Series":
        if not isinstance(other, Series):
            c = _p(other)
            return self.map(lambda x: x * c)
        a, b = self._aligned(other)
        n = a.order
        out = []
        for k in range(n + 1):
            acc = MPoly()
            for i in range(k + 1):
                if a.coeffs[i] and b.coeffs[k - i]:
                    acc = acc + a.coeffs[i] * b.coeffs[k - i]
            out.append(acc)
        return Series(tuple(out))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Series) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def pow_int(self, k: int) -> "Series":
        if k < 0:
            raise SeriesError("pow_int needs a nonnegative exponent; invert first")
        out, base = Series.const(1, self.order), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def invert(self) -> "Series":
        if self.coeffs[0] != MPoly.const(1):
            raise SeriesError("invert needs constant term 1")
        inv = [MPoly.const(1)]
        for n in range(1, self.order + 1):
            acc = MPoly()
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    acc = acc - self.coeffs[k] * inv[n - k]
            inv.append(acc)
        return Series(tuple(inv))

    def __truediv__(self, other) -> "Series":
        if isinstance(other, Series):
            return self * other.invert()
        return self.map(lambda c: c / other)

    def differentiate(self) -> "Series":
        """Derivative; known only to one order less."""
        if self.order == 0:
            raise SeriesError("cannot differentiate a series of order 0")
        return Series(tuple(self.coeffs[n] * n for n in range(1, self.order + 1)))

    def integrate(self) -> "Series":
        """Antiderivative with zero constant term, known to one order more."""
        cs = [MPoly()] + [self.coeffs[n] / (n + 1) for n in range(self.order + 1)]
        return Series(tuple(cs))

    def exp(self) -> "Series":
        if self.coeffs[0]:
            raise SeriesError("exp needs constant term 0")
        e = [MPoly.const(1)]
        for n in range(1, self.order + 1):
            acc = MPoly()
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    acc = acc + (k * self.coeffs[k]) * e[n - k]
            e.append(acc / n)
        return Series(tuple(e))

    def log(self) -> "Series":
        if self.coeffs[0] != MPoly.const(1):
            raise SeriesError("log needs constant term 1")
        if self.order == 0:
            return Series.const(0, 0)
        return (self.differentiate() * self.invert()).integrate()

    def power(self, m: Scalar) -> "Series":
        """self ** m for an integer or a polynomial exponent (constant term 1)."""
        if isinstance(m, MPoly) and m.is_constant():
            m = m.constant_term()
        if isinstance(m, Fraction) and m.denominator == 1:
            m = int(m)
        if isinstance(m, int):
            return self.pow_int(m) if m >= 0 else self.invert().pow_int(-m)
        return (self.log() * _p(m)).exp()

    def __str__(self) -> str:
        parts = [f"({c})*z^{n}" for n, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) if parts else "0"


def egf_from_polys(polys: Sequence[MPoly]) -> Series:
    return Series.egf(polys)


# closed-form building blocks ----------------------------------------------------------


def K_series(e1: Scalar, e2: Scalar, order: int) -> Series:
    """(x e^{yz} - y e^{xz}) / (x - y) written through e1 = x+y and e2 = xy:
    1 - sum_{n>=2} e2 h_{n-2}(x,y) z^n/n!."""
    e1, e2 = _p(e1), _p(e2)
    h = [MPoly.const(1), e1]
    while len(h) < order:
        h.append(e1 * h[-1] - e2 * h[-2])
    vals = [MPoly.const(1), MPoly()] + [-(e2 * h[n - 2]) for n in range(2, order + 1)]
    return Series.egf(vals[: order + 1], order)


_TRIG = {
    # name: (parity offset, alternating sign, divide-by-theta)
    "cos": (0, True),
    "sinOverTheta": (1, True),
    "cosh": (0, False),
    "sinhOverTheta": (1, False),
}


def even_trig(builder: str, theta_sq: Scalar, order: int) -> Series:
    """cos/sin/cosh/sinh/sec/tan of theta*z (or theta*z/2 for the ``Half``
    names), with the odd ones divided by theta, as series in z whose
    coefficients are polynomials in ``theta_sq``."""
    half = builder.endswith("Half") or "Half" in builder
    base = builder.replace("Half", "")
    scale = Fraction(1, 2) if half else Fraction(1)
    ts = _p(theta_sq)
    if base in ("sec", "tanOverTheta"):
        cos = even_trig("cosHalf" if half else "cos", ts, order)
        sec = cos.invert()
        if base == "sec":
            return sec
        return even_trig("sinHalfOverTheta" if half else "sinOverTheta", ts, order) * sec
    if base not in _TRIG:
        raise ValueError(f"unknown trig builder {builder!r}")
    parity, alternating = _TRIG[base]
    cs = [MPoly()] * (order + 1)
    for n in range(parity, order + 1, 2):
        k = (n - parity) // 2
        sign = -1 if alternating and k % 2 else 1
        cs[n] = (ts ** k) * (sign * scale ** n / factorial(n))
    return Series(tuple(cs))


def jfraction(
    b: Union[Sequence[Scalar], Callable[[int], Scalar]],
    lam: Union[Sequence[Scalar], Callable[[int], Scalar]],
    order: int,
) -> Series:
    """1/(1 - b_0 z - lam_1 z^2/(1 - b_1 z - lam_2 z^2/(...))), evaluated from
    the bottom level up.  ``lam`` is indexed from 1 when given as a function
    and from 0 (meaning lam_1) when given as a sequence."""
    bf = b if callable(b) else (lambda k: b[k])
    lf = lam if callable(lam) else (lambda k: lam[k - 1])
    z = Series.z(order)
    depth = order // 2 + 1
    f = Series.const(1, order)
    for k in range(depth - 1, -1, -1):
        f = (Series.const(1, order) - z * _p(bf(k)) - z * z * _p(lf(k + 1)) * f).invert()
    return f


def E_series(order: int) -> Series:
    """E(x;z) = sum_n E_{n+1}(x) z^n/n! from E_1 = E_2 = 1 and
    E_{n+2} = E_{n+1} + x sum_{j=1}^{n} C(n,j) E_j E_{n+1-j}."""
    E = [MPoly.const(1), MPoly.const(1), MPoly.const(1)]
    for n in range(1, order):
        E.append(E[n + 1] + X * sum((comb(n, j) * E[j] * E[n + 1 - j] for j in range(1, n + 1)), MPoly()))
    return Series.egf(E[1: order + 2], order)


def _andre_factor(theta_sq: Scalar, order: int) -> Series:
    # sec(theta z/2) / (1 - tan(theta z/2)/theta)
    sec = even_trig("secHalf", theta_sq, order)
    tan = even_trig("tanHalfOverTheta", theta_sq, order)
    return sec * (Series.const(1, order) - tan).invert()


def _gamma_base(order: int) -> Series:
    # cosh(uz/2) - sinh(uz/2)/u with u^2 = 1 - 4x
    u2 = 1 - 4 * X
    return even_trig("coshHalf", u2, order) - even_trig("sinhHalfOverTheta", u2, order)


# identity registry ------------------------------------------------------------------


@dataclass(frozen=True)
class Identity:
    name: str
    description: str
    lhs: Optional[Callable[[int], list[MPoly]]]  # EGF coefficients a_0..a_N
    rhs: Callable[[int, Mapping[str, MPoly]], Series]
    symbols: tuple[str, ...] = ()  # exponent symbols probed at integer points
    default_order: int = 7
    ogf: bool = False  # lhs values are ordinary coefficients


def _poly_list(fn: Callable[[int], MPoly], order: int, start: int = 0) -> list[MPoly]:
    return [fn(n) for n in range(start, start + order + 1)]


def _fam(family: Family, shift0: bool = True):
    def lhs(order: int) -> list[MPoly]:
        return [
            MPoly.const(1) if (n == 0 and shift0) else named_polynomial(family, n)
            for n in range(order + 1)
        ]
    return lhs


def _sub(lhs, bindings):
    def inner(order):
        return [p.substitute(bindings) for p in lhs(order)]
    return inner


def _env(env: Mapping[str, MPoly], name: str) -> MPoly:
    return env.get(name, MPoly.var(name))


# right-hand sides, each taking the exponent environment

def _rhs_cs_cyc(N, env):
    a = _env(env, "a")
    return Series.exp_linear(a * T, N) * K_series(X + Y, X * Y, N).power(-a)


def _rhs_master(N, env, f=None, g=None, t=None):
    a, b = _env(env, "a"), _env(env, "b")
    f = _env(env, "f") if f is None else _p(f)
    g = _env(env, "g") if g is None else _p(g)
    t = T if t is None else _p(t)
    k = K_series(U3 + U4, U1 * U2, N)
    return Series.exp_linear((a * U3 + b * U4) * t, N) * k.power(-(a * f + b * g))


def _rhs_derangement(N, power):
    inner = [MPoly.const(1), MPoly()] + [
        -sum((X ** i for i in range(1, n)), MPoly()) for n in range(2, N + 1)
    ]
    return Series.egf(inner[: N + 1], N).power(power)


def _rhs_jz(N, env):
    a = _env(env, "a")
    return Series.exp_linear(a * T, N) * K_series(U3 + U4, U1 * U2, N).power(-a)


def _rhs_gamma_cyc(N, env):
    a = _env(env, "a")
    return Series.exp_linear(a * (T - Fraction(1, 2)), N) * _gamma_base(N).power(-a)


def _rhs_gamma_lin(N, env):
    a = _env(env, "a")
    return Series.exp_linear(a * (T - 1), N) * _gamma_base(N).power(-2 * a)


def _rhs_axyt_y1(N, env):
    a = _env(env, "a")
    return Series.exp_linear(a * (X + 1) * T, N) * K_series(X + 1, X, N).power(-2 * a)


def _rhs_dstar(N, env):
    a = _env(env, "a")
    return _andre_factor(2 * X - 1, N).power(2 * a)


def _rhs_web_E(N, env):
    a = _env(env, "a")
    return Series.exp_linear(a * (T - 1), N) * E_series(N).power(a)


def _rhs_web_trig(N, env):
    a = _env(env, "a")
    return Series.exp_linear(a * (T - 1), N) * _andre_factor(2 * X - 1, N).power(2 * a)


def _rhs_gf_f(N, env):
    a = _env(env, "a")
    k = K_series(X + Y, X * Y, N)
    return Series.exp_linear(Y - T, N) * Series.exp_linear((1 + a) * T, N) * k.power(-(1 + a)) * a


def _sin(N):
    return even_trig("sinOverTheta", 1, N)


def _rhs_up_down(N, env):
    a = _env(env, "a")
    return Series.exp_linear(a * (T - 1), N) * (Series.const(1, N) - _sin(N)).power(-a)


def _rhs_roselle(N, env):
    # x = alpha = 1 in the succession generating function
    k = K_series(1 + Y, Y, N)
    return Series.exp_linear(Y - T, N) * Series.exp_linear(2 * T, N) * k.power(-2)


def _rhs_classical(N, env):
    # (x-1)/(x - e^{(x-1)z}) = 1/(1 - sum_{n>=1} (x-1)^{n-1} z^n/n!)
    vals = [MPoly.const(1)] + [-((X - 1) ** (n - 1)) for n in range(1, N + 1)]
    return Series.egf(vals, N).invert()


# left-hand sides built by enumeration

def _lhs_a9_sub(bindings):
    def inner(order):
        return [
            MPoly.const(1) if n == 0 else named_polynomial(Family.A9, n).substitute(bindings)
            for n in range(order + 1)
        ]
    return inner


def _lhs_cyc4(order):
    return [MPoly.const(1)] + [named_polynomial(Family.CYC4, n) for n in range(1, order + 1)]


def _weighted(domain, size_shift, stats, constraints, weight):
    def inner(order):
        out = []
        for n in range(order + 1):
            dist = cached_distribution(domain, n + size_shift, stats, constraints)
            out.append(sum((c * weight(*v) for v, c in sorted(dist.items())), MPoly()))
        return out
    return inner


_lhs_web = _weighted(
    "S", 0, ("drop", "fix", "cyc"), (pred("cycle_andre"),),
    lambda drop, fix, cyc: X ** drop * T ** fix * A ** cyc,
)
_lhs_up_down = _weighted(
    "S", 0, ("fix", "cyc"), (pred("cycle_up_down"),), lambda fix, cyc: T ** fix * A ** cyc
)
_lhs_ca_x1 = _weighted(
    "S", 0, ("fix", "cyc"), (pred("cycle_andre"),), lambda fix, cyc: T ** fix * A ** cyc
)
_lhs_roselle = _weighted("S", 1, ("des", "suc"), (), lambda des, suc: Y ** des * T ** suc)
_lhs_classical = _weighted("S", 0, ("exc",), (), lambda exc: X ** exc)


def _lhs_andre_rmin(kind):
    return _weighted(
        "S", 1, ("rminda", "rmin"), (pred(f"andre{kind}"),),
        lambda rminda, rmin: T ** rminda * A ** (rmin - 1),
    )


def _lhs_E(order):
    return [euler_polys(n + 1) for n in range(order + 1)]


def _lhs_dn(order):
    out = []
    for n in range(order + 1):
        d = d_coeffs(gamma_table("axyt", n))
        out.append(sum((dj * X ** j for j, dj in enumerate(d)), MPoly()))
    return out


def _lhs_fsuc(order):
    return [named_polynomial(Family.FSUC, n + 1) for n in range(order + 1)]


def _rhs_E_ode(N, env):
    e = Series.egf(_lhs_E(N), N)
    return (Series.z(N) + e.integrate().integrate() * X).exp()


IDENTITIES: dict[str, Identity] = {}


def _register(*items: Identity) -> None:
    for it in items:
        IDENTITIES[it.name] = it


_register(
    Identity("gen-CS-cyc", "cycle (alpha,t)-Eulerian polynomials",
             _fam(Family.ACYC), _rhs_cs_cyc, ("a",)),
    Identity("master-egf", "nine-statistic generalised Eulerian polynomials",
             _lhs_a9_sub({}), _rhs_master, ("a", "b", "f", "g"), 6),
    Identity("binomial", "binomial-Stirling-Eulerian specialisation f=0, g=1, t=1",
             _lhs_a9_sub({"f": 0, "g": 1, "t": 1}),
             lambda N, env: _rhs_master(N, env, f=0, g=1, t=1), ("a", "b")),
    Identity("equivalent-JI", "specialisation f=g=t=1",
             _lhs_a9_sub({"f": 1, "g": 1, "t": 1}),
             lambda N, env: _rhs_master(N, env, f=1, g=1, t=1), ("a", "b")),
    Identity("kim-zeng", "derangements, alpha=1",
             _sub(_fam(Family.ACYC), {"y": 1, "t": 0, "a": 1}),
             lambda N, env: _rhs_derangement(N, -1)),
    Identity("ksavrelov-zeng", "derangements, alpha=-1",
             _sub(_fam(Family.ACYC), {"y": 1, "t": 0, "a": -1}),
             lambda N, env: _rhs_derangement(N, 1)),
    Identity("gen-JZ-cyc", "cyclic peak/double ascent/double descent refinement",
             _lhs_cyc4, _rhs_jz, ("a",)),
    Identity("gen-Gamma-coe", "gamma-vector generating polynomials, binomial-Eulerian kind",
             _fam(Family.GCYC), _rhs_gamma_cyc, ("a",)),
    Identity("equ2-gen-Gamma-coe", "gamma-vector generating polynomials, Eulerian kind",
             _fam(Family.GLIN), _rhs_gamma_lin, ("a",)),
    Identity("gen-A-x1ta", "(alpha,t)-Eulerian polynomials at y=1",
             _sub(_fam(Family.AXYT), {"y": 1}), _rhs_axyt_y1, ("a",)),
    Identity("exp-gen-func-F", "André permutations by des and lmax",
             _fam(Family.DSTAR, shift0=False), _rhs_dstar, ("a",)),
    Identity("E-ode", "E(x;z) as exp(z + x times a double integral of E)",
             _lhs_E, _rhs_E_ode),
    Identity("E-recurrence", "E(x;z) from the convolution recurrence",
             _lhs_E, lambda N, env: E_series(N)),
    Identity("E-closed", "E(x;z) against the squared sec/tan block",
             _lhs_E, lambda N, env: _andre_factor(2 * X - 1, N).power(2)),
    Identity("exponential-formula-web", "cycle André permutations through E(x;z)",
             _lhs_web, _rhs_web_E, ("a",)),
    Identity("egf-formula-web", "cycle André permutations through sec/tan",
             _lhs_web, _rhs_web_trig, ("a",)),
    Identity("exp-dn", "normalised gamma coefficients d_{n,j}",
             _lhs_dn, _rhs_web_trig, ("a",)),
    Identity("gf-F", "succession polynomials F_{n+1}",
             _lhs_fsuc, _rhs_gf_f, ("a",)),
    Identity("up-down", "cycle-up-down permutations by fix and cyc",
             _lhs_up_down, _rhs_up_down, ("a",)),
    Identity("web-x1", "cycle André permutations by fix and cyc",
             _lhs_ca_x1, _rhs_up_down, ("a",)),
    Identity("andre1-rmin", "André permutations of the first kind by rminda and rmin",
             _lhs_andre_rmin(1), _rhs_up_down, ("a",)),
    Identity("andre2-rmin", "André permutations of the second kind by rminda and rmin",
             _lhs_andre_rmin(2), _rhs_up_down, ("a",)),
    Identity("roselle", "permutations by descents and successions",
             _lhs_roselle, _rhs_roselle),
    Identity("eulerian-classical", "classical Eulerian polynomials (x-1)/(x-e^{(x-1)z})",
             _lhs_classical, _rhs_classical),
)


def _rhs_con_frac(N, env):
    a, b = _env(env, "a"), _env(env, "b")
    f, g = _env(env, "f"), _env(env, "g")
    return jfraction(
        lambda k: k * (U3 + U4) + (a * U3 + b * U4) * T,
        lambda k: (k - 1 + a * f + b * g) * k * U1 * U2,
        N,
    )


IDENTITIES["con-frac-A"] = Identity(
    "con-frac-A", "J-fraction for the nine-statistic polynomials (ordinary series)",
    _lhs_a9_sub({}), _rhs_con_frac, (), 7, ogf=True,
)


# no enumeration here: the E-based closed form is checked against the trig one
IDENTITIES["web-oracles"] = Identity(
    "web-oracles", "E-based and trig-based right-hand sides agree",
    None, _rhs_web_trig, ("a",),
)


def _compare(name: str, lhs: Series, rhs: Series, where: str, ogf: bool = False) -> Verdict | None:
    la, ra = (lhs.coeffs, rhs.coeffs) if ogf else (lhs.egf_coeffs(), rhs.egf_coeffs())
    for n, (l, r) in enumerate(zip(la, ra)):
        if l != r:
            return Verdict.fail(name, f"{where}n={n}", r, l)
    return None


def _point_env(symbols: Iterable[str], p: int) -> dict[str, MPoly]:
    return {s: MPoly.const(p) for s in symbols}


def check_identity(name: str, order: int | None = None, points: Sequence[int] | None = None) -> Verdict:
    """Compare the enumerated left side with the closed form, symbolically in
    the exponent variables and at each integer point."""
    if name not in IDENTITIES:
        raise ValueError(f"unknown identity {name!r}; choose from {sorted(IDENTITIES)}")
    ident = IDENTITIES[name]
    N = ident.default_order if order is None else order
    if N < 0 or N > 10:
        raise ValueError("order must lie in 0..10")
    pts = list(range(N + 1)) if points is None else list(points)
    if not ident.symbols:
        pts = []

    if ident.lhs is None:
        left_of = lambda env: _rhs_web_E(N, env)  # noqa: E731
    else:
        polys = ident.lhs(N)
        build = Series.of if ident.ogf else Series.egf
        left_of = lambda env: build(  # noqa: E731
            [p.substitute(env) if env else p for p in polys], N
        )

    bad = _compare(name, left_of({}), ident.rhs(N, {}), "", ident.ogf)
    if bad:
        bad.info.update(order=N, points=pts, mode="symbolic")
        return bad
    for p in pts:
        env = _point_env(ident.symbols, p)
        bad = _compare(name, left_of(env), ident.rhs(N, env), f"point={p}, ", ident.ogf)
        if bad:
            bad.info.update(order=N, points=pts, mode="point")
            return bad
    return Verdict(name, True, ident.description, info={"order": N, "points": pts})
