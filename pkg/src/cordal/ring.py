"""Exact arithmetic in Z[l^±, m^±, g^±] and its images in Z/d.

The three variables are the framing/meridian/longitude parameters
lambda, mu and Gamma. A scalar is a map from exponent triples to
nonzero integers; the empty map is zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping

from .errors import NonUnit

Exp = tuple[int, int, int]

_NAMES = ("l", "m", "g")


class LaurentScalar:
    __slots__ = ("_t", "_h")

    def __init__(self, terms: Mapping[Exp, int] | Iterable[tuple[Exp, int]] = ()):
        acc: dict[Exp, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = (int(e[0]), int(e[1]), int(e[2]))
            acc[e] = acc.get(e, 0) + int(c)
        self._t = {e: c for e, c in sorted(acc.items()) if c}
        self._h = None

    @classmethod
    def _raw(cls, t: dict[Exp, int]) -> "LaurentScalar":
        # caller guarantees no zero coefficients
        s = object.__new__(cls)
        s._t = dict(sorted(t.items()))
        s._h = None
        return s

    @classmethod
    def const(cls, c: int) -> "LaurentScalar":
        return cls({(0, 0, 0): c})

    @classmethod
    def mono(cls, l: int = 0, m: int = 0, g: int = 0, c: int = 1) -> "LaurentScalar":
        return cls({(l, m, g): c})

    @property
    def terms(self) -> dict[Exp, int]:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def is_zero(self) -> bool:
        return not self._t

    def is_unit(self) -> bool:
        if len(self._t) != 1:
            return False
        (c,) = self._t.values()
        return c in (1, -1)

    def inverse(self) -> "LaurentScalar":
        if not self.is_unit():
            raise ValueError(f"{self} is not a unit")
        ((e, c),) = self._t.items()
        return LaurentScalar._raw({(-e[0], -e[1], -e[2]): c})

    def __add__(self, other):
        other = _coerce(other)
        t = dict(self._t)
        for e, c in other._t.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return LaurentScalar._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentScalar._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        t: dict[Exp, int] = {}
        for (a1, b1, c1), v1 in self._t.items():
            for (a2, b2, c2), v2 in other._t.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                t[e] = t.get(e, 0) + v1 * v2
        return LaurentScalar._raw({e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentScalar.const(other)
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._h is None:
            self._h = hash(tuple(self._t.items()))
        return self._h

    def __repr__(self):
        return f"LaurentScalar({self})"

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for e, c in self._t.items():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(_NAMES, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> list[dict]:
        return [{"l": e[0], "m": e[1], "g": e[2], "c": str(c)} for e, c in self._t.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> "LaurentScalar":
        return cls([((d["l"], d["m"], d["g"]), int(d["c"])) for d in data])


def _coerce(x) -> LaurentScalar:
    if isinstance(x, LaurentScalar):
        return x
    if isinstance(x, int):
        return LaurentScalar.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a scalar")


ZERO = LaurentScalar()
ONE = LaurentScalar.const(1)
LAMBDA = LaurentScalar.mono(l=1)
MU = LaurentScalar.mono(m=1)
GAMMA = LaurentScalar.mono(g=1)
# value of a_ii^0
LOOP = LaurentScalar({(0, 0, 1): 1, (0, 1, 1): 1})


def scalar_arith(a: LaurentScalar, b: LaurentScalar | None, op: str) -> LaurentScalar:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown op {op!r}")


@dataclass(frozen=True)
class ModularValue:
    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def __int__(self):
        return self.residue


@dataclass(frozen=True)
class Specialization:
    """A point (d, l0, m0, g0) with all parameters units mod d."""

    d: int
    lam: int
    mu: int
    gamma: int

    def __post_init__(self):
        if self.d < 2:
            raise NonUnit(f"modulus {self.d} must be at least 2")
        for name, v in (("lambda", self.lam), ("mu", self.mu), ("gamma", self.gamma)):
            if gcd(v, self.d) != 1:
                raise NonUnit(f"{name}={v} is not a unit mod {self.d}")

    def power(self, base: int, k: int) -> int:
        return pow(base, k, self.d)

    def value(self, a: LaurentScalar) -> int:
        d = self.d
        tot = 0
        for (el, em, eg), c in a.items():
            tot += c * pow(self.lam, el, d) * pow(self.mu, em, d) * pow(self.gamma, eg, d)
        return tot % d


def specialize(a: LaurentScalar, d: int, lam: int, mu: int, gamma: int) -> ModularValue:
    sp = Specialization(d, lam, mu, gamma)
    return ModularValue(sp.value(a), d)


def unit_triples(d: int) -> list[tuple[int, int, int]]:
    units = [u for u in range(1, d) if gcd(u, d) == 1]
    return [(a, b, c) for a in units for b in units for c in units]
