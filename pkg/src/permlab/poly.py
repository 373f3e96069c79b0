"""Exact sparse multivariate polynomials over the integers and rationals.

Every polynomial lives in the fixed alphabet ``VARS``.  A monomial is stored as
a single Python integer that packs the exponent vector (16 bits per variable),
so that multiplying monomials is one integer addition.  Coefficients are
``int`` or :class:`fractions.Fraction`; fractions with denominator one are
normalised back to ``int``.

>>> x, y = MPoly.var("x"), MPoly.var("y")
>>> print((x + y) ** 2)
x^2 + 2*x*y + y^2
"""

from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Union

__all__ = ["VARS", "MPoly", "Coeff", "to_json", "from_json", "parse_coeff"]

VARS: tuple[str, ...] = ("x", "y", "t", "a", "b", "u1", "u2", "u3", "u4", "f", "g")
_INDEX = {v: i for i, v in enumerate(VARS)}
_BITS = 16
_MASK = (1 << _BITS) - 1
_LIMIT = 1 << _BITS

Coeff = Union[int, Fraction]


def _norm(c: Coeff) -> Coeff:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _pack(exps: Iterable[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e < 0:
            raise ValueError("negative exponent")
        if e >= _LIMIT:
            raise OverflowError(f"exponent {e} exceeds the packed range")
        key |= e << (_BITS * i)
    return key


def _unpack(key: int) -> tuple[int, ...]:
    return tuple((key >> (_BITS * i)) & _MASK for i in range(len(VARS)))


def _var_index(name: str) -> int:
    try:
        return _INDEX[name]
    except KeyError:
        raise ValueError(f"unknown variable {name!r}; alphabet is {VARS}") from None


def parse_coeff(text: str) -> Coeff:
    return _norm(Fraction(text))


class MPoly:
    """Immutable polynomial in the variables of ``VARS``."""

    __slots__ = ("_terms", "_hash", "_maxdeg")

    def __init__(self, terms: Mapping[int, Coeff] | None = None):
        self._terms: dict[int, Coeff] = (
            {k: _norm(c) for k, c in terms.items() if c} if terms else {}
        )
        self._hash: int | None = None
        self._maxdeg: int | None = None

    @classmethod
    def _raw(cls, terms: dict[int, Coeff]) -> "MPoly":
        # trusted constructor: terms already normalised and free of zeros
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        p._maxdeg = None
        return p

    # constructors -----------------------------------------------------------

    @classmethod
    def const(cls, c: Coeff) -> "MPoly":
        return cls({0: c}) if c else cls()

    @classmethod
    def var(cls, name: str) -> "MPoly":
        return cls._raw({1 << (_BITS * _var_index(name)): 1})

    @classmethod
    def vars(cls, names: str) -> tuple["MPoly", ...]:
        return tuple(cls.var(n) for n in names.split())

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: Coeff = 1) -> "MPoly":
        vec = [0] * len(VARS)
        for name, e in exps.items():
            vec[_var_index(name)] += e
        return cls({_pack(vec): coeff})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Mapping[str, int], Coeff]]) -> "MPoly":
        acc: dict[int, Coeff] = {}
        for exps, c in terms:
            vec = [0] * len(VARS)
            for name, e in exps.items():
                vec[_var_index(name)] += e
            k = _pack(vec)
            acc[k] = acc.get(k, 0) + c
        return cls(acc)

    @staticmethod
    def key(exps: Mapping[str, int]) -> int:
        """Packed monomial key, for callers that accumulate their own term maps."""
        vec = [0] * len(VARS)
        for name, e in exps.items():
            vec[_var_index(name)] += e
        return _pack(vec)

    @staticmethod
    def unit_key(name: str) -> int:
        return 1 << (_BITS * _var_index(name))

    # inspection -------------------------------------------------------------

    def terms(self) -> Iterator[tuple[tuple[int, ...], Coeff]]:
        """Terms as (exponent vector, coefficient) in deterministic order."""
        for k in self._sorted_keys():
            yield _unpack(k), self._terms[k]

    def _sorted_keys(self) -> list[int]:
        return sorted(self._terms, key=_unpack, reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant_term(self) -> Coeff:
        return self._terms.get(0, 0)

    def variables(self) -> set[str]:
        used = 0
        for k in self._terms:
            used |= k
        return {
            v for i, v in enumerate(VARS) if (used >> (_BITS * i)) & _MASK
        }

    def degree(self, var: str) -> int:
        i = _var_index(var)
        return max(((k >> (_BITS * i)) & _MASK for k in self._terms), default=0)

    def total_degree(self, names: Iterable[str]) -> set[int]:
        """Set of total degrees of the terms in the given variables."""
        idx = [_var_index(n) for n in names]
        return {
            sum((k >> (_BITS * i)) & _MASK for i in idx) for k in self._terms
        }

    def _bound(self) -> int:
        if self._maxdeg is None:
            self._maxdeg = max(
                (max(_unpack(k)) for k in self._terms), default=0
            )
        return self._maxdeg

    def coefficients(self) -> list[Coeff]:
        return [self._terms[k] for k in self._sorted_keys()]

    # arithmetic -------------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)) or isinstance(other, Rational):
            return MPoly.const(other)
        return NotImplemented

    def __add__(self, other) -> "MPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for k, c in small.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _norm(v)
            else:
                out.pop(k, None)
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw({k: -c for k, c in self._terms.items()})

    def __pos__(self) -> "MPoly":
        return self

    def __sub__(self, other) -> "MPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> "MPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return MPoly()
        if self._bound() + other._bound() >= _LIMIT:
            raise OverflowError("product exponent exceeds the packed range")
        if len(b) == 1:
            (kb, cb), = b.items()
            if kb == 0:
                if cb == 1:
                    return self
                return MPoly._raw({k: _norm(c * cb) for k, c in a.items()})
            return MPoly._raw({k + kb: _norm(c * cb) for k, c in a.items()})
        if len(a) == 1:
            return other * self
        out: dict[int, Coeff] = {}
        get = out.get
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return MPoly({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if not other.is_constant() or not other:
                raise ZeroDivisionError("division only by nonzero constants")
            other = other.constant_term()
        if not other:
            raise ZeroDivisionError("division by zero")
        inv = Fraction(1) / Fraction(other)
        return MPoly._raw({k: _norm(c * inv) for k, c in self._terms.items()})

    def exact_div(self, d: int) -> "MPoly":
        """Divide every coefficient by the integer ``d``; raise if inexact."""
        out = {}
        for k, c in self._terms.items():
            q, r = divmod(c, d) if type(c) is int else (c / d, 0)
            if r:
                raise ArithmeticError(f"coefficient {c} not divisible by {d}")
            out[k] = _norm(q)
        return MPoly._raw(out)

    def __pow__(self, e: int) -> "MPoly":
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            other = self._coerce(other)
            if other is NotImplemented:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # structural operations --------------------------------------------------

    def coeff(self, var: str, degree: int) -> "MPoly":
        """Coefficient of ``var**degree``, as a polynomial in the other variables."""
        i = _var_index(var)
        shift = _BITS * i
        strip = degree << shift
        out = {}
        for k, c in self._terms.items():
            if (k >> shift) & _MASK == degree:
                out[k - strip] = c
        return MPoly._raw(out)

    def substitute(self, bindings: Mapping[str, Union["MPoly", Coeff]]) -> "MPoly":
        """Simultaneous substitution of variables by polynomials."""
        if not bindings:
            return self
        images = {}
        for name, img in bindings.items():
            images[_var_index(name)] = img if isinstance(img, MPoly) else MPoly.const(img)
        idx = sorted(images)
        powers: dict[tuple[int, int], MPoly] = {}

        def power(i: int, e: int) -> MPoly:
            key = (i, e)
            if key not in powers:
                powers[key] = images[i] if e == 1 else power(i, e - 1) * images[i]
            return powers[key]

        # group terms by the exponents of the substituted variables
        groups: dict[tuple[int, ...], dict[int, Coeff]] = {}
        for k, c in self._terms.items():
            sub = tuple((k >> (_BITS * i)) & _MASK for i in idx)
            rest = k
            for i, e in zip(idx, sub):
                rest -= e << (_BITS * i)
            groups.setdefault(sub, {})[rest] = c
        acc: dict[int, Coeff] = {}
        for sub, rest_terms in groups.items():
            factor = MPoly.const(1)
            for i, e in zip(idx, sub):
                if e:
                    factor = factor * power(i, e)
            if not factor:
                continue
            prod = MPoly._raw(rest_terms) * factor
            for k, c in prod._terms.items():
                acc[k] = acc.get(k, 0) + c
        return MPoly(acc)

    def evaluate(self, values: Mapping[str, Coeff]) -> "MPoly":
        return self.substitute(values)

    def swap(self, v1: str, v2: str) -> "MPoly":
        return self.substitute({v1: MPoly.var(v2), v2: MPoly.var(v1)})

    def map_coefficients(self, fn) -> "MPoly":
        return MPoly({k: fn(c) for k, c in self._terms.items()})

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def is_integral(self) -> bool:
        return all(type(c) is int for c in self._terms.values())

    # text -------------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(VARS, exps) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                cs = f"({c})" if type(c) is Fraction else str(c)
                parts.append(f"{cs}*{mono}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MPoly({str(self)!r})"


def to_json(p: MPoly) -> list[dict]:
    """Deterministic JSON-ready encoding: terms in descending exponent order."""
    out = []
    for exps, c in p.terms():
        out.append(
            {
                "coeff": str(c),
                "exps": {v: e for v, e in zip(VARS, exps) if e},
            }
        )
    return out


def from_json(data: list[dict] | str) -> MPoly:
    if isinstance(data, str):
        data = json.loads(data)
    return MPoly.from_terms((t["exps"], parse_coeff(t["coeff"])) for t in data)
