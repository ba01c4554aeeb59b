"""Free noncommutative algebras A_n, A_n^+ and A_n^- over the Laurent ring.

Generators are a_ij^x. The only relation is a_ii^0 = (1+m)g, applied
eagerly, so every NCPoly is held in normal form and equality is plain
map equality. The plus algebra adds the sentinel index 0, the minus
algebra the sentinel index n+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernel
from .errors import ContextMismatch, NotConnectable
from .ring import LaurentScalar, ONE

Triple = tuple[int, int, int]
Word = tuple[Triple, ...]

VARIANTS = ("core", "plus", "minus")


@dataclass(frozen=True)
class Context:
    n: int
    variant: str = "core"

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.n < 1:
            raise ValueError("n must be positive")

    @property
    def lo(self) -> int:
        return 0 if self.variant == "plus" else 1

    @property
    def hi(self) -> int:
        return self.n + 1 if self.variant == "minus" else self.n

    @property
    def indices(self) -> range:
        return range(self.lo, self.hi + 1)

    @property
    def sentinel(self) -> int | None:
        if self.variant == "plus":
            return 0
        if self.variant == "minus":
            return self.n + 1
        return None

    def core(self) -> "Context":
        return Context(self.n, "core")

    def check(self, t: Triple) -> None:
        lo, hi = self.lo, self.hi
        if not (lo <= t[0] <= hi and lo <= t[1] <= hi):
            raise ContextMismatch(f"generator a[{t[0]},{t[1]}]^{t[2]} outside {self}")

    def __str__(self):
        return f"{self.variant}(n={self.n})"


@dataclass(frozen=True)
class Generator:
    i: int
    j: int
    x: int
    ctx: Context

    def __post_init__(self):
        self.ctx.check(self.triple)

    @property
    def triple(self) -> Triple:
        return (self.i, self.j, self.x)

    def poly(self) -> "NCPoly":
        return NCPoly.gen(self.ctx, self.i, self.j, self.x)


def word_key(w: Word):
    return (len(w), w)


def _fmt_gen(t: Triple) -> str:
    return f"a[{t[0]},{t[1]}]^{t[2]}"


class NCPoly:
    """Normalized element of A_n, A_n^+ or A_n^-."""

    __slots__ = ("ctx", "_d")

    def __init__(self, ctx: Context, flat: dict | None = None):
        self.ctx = ctx
        self._d = flat if flat is not None else {}

    # -- construction --------------------------------------------------
    @classmethod
    def zero(cls, ctx: Context) -> "NCPoly":
        return cls(ctx, {})

    @classmethod
    def scalar(cls, ctx: Context, s: LaurentScalar | int) -> "NCPoly":
        if isinstance(s, int):
            s = LaurentScalar.const(s)
        return cls(ctx, {((), e[0], e[1], e[2]): c for e, c in s.items()})

    @classmethod
    def one(cls, ctx: Context) -> "NCPoly":
        return cls.scalar(ctx, ONE)

    @classmethod
    def gen(cls, ctx: Context, i: int, j: int, x: int) -> "NCPoly":
        ctx.check((i, j, x))
        return cls(ctx, kernel.normalize({(((i, j, x),), 0, 0, 0): 1}))

    @classmethod
    def from_terms(
        cls, ctx: Context, terms: Iterable[tuple[LaurentScalar | int, Sequence[Triple]]]
    ) -> "NCPoly":
        raw: dict = {}
        for coef, word in terms:
            if isinstance(coef, int):
                coef = LaurentScalar.const(coef)
            w = tuple(tuple(t) for t in word)
            for t in w:
                ctx.check(t)
            kernel.iadd(raw, {(w, e[0], e[1], e[2]): c for e, c in coef.items()})
        return cls(ctx, kernel.normalize(raw))

    # -- inspection ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self._d

    @property
    def flat(self) -> dict:
        return self._d

    def terms(self) -> dict[Word, LaurentScalar]:
        """Map word -> coefficient, in canonical order."""
        acc: dict[Word, dict] = {}
        for (w, l, m, g), c in self._d.items():
            acc.setdefault(w, {})[(l, m, g)] = c
        return {w: LaurentScalar(acc[w]) for w in sorted(acc, key=word_key)}

    def words(self) -> list[Word]:
        return sorted({k[0] for k in self._d}, key=word_key)

    def coeff(self, word: Sequence[Triple]) -> LaurentScalar:
        w = tuple(tuple(t) for t in word)
        return LaurentScalar({(l, m, g): c for (ww, l, m, g), c in self._d.items() if ww == w})

    def __len__(self):
        return len({k[0] for k in self._d})

    # -- arithmetic ----------------------------------------------------
    def _same(self, other: "NCPoly") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatch(f"{self.ctx} vs {other.ctx}")

    def __add__(self, other):
        if not isinstance(other, NCPoly):
            other = NCPoly.scalar(self.ctx, other)
        self._same(other)
        return NCPoly(self.ctx, kernel.add(self._d, other._d))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, NCPoly):
            other = NCPoly.scalar(self.ctx, other)
        self._same(other)
        return NCPoly(self.ctx, kernel.add(self._d, other._d, -1))

    def __rsub__(self, other):
        return NCPoly.scalar(self.ctx, other) - self

    def __neg__(self):
        return NCPoly(self.ctx, {k: -c for k, c in self._d.items()})

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            self._same(other)
            return NCPoly(self.ctx, kernel.mul(self._d, other._d))
        return self.scale(other)

    def __rmul__(self, other):
        # scalars commute with everything
        return self.scale(other)

    def scale(self, s: LaurentScalar | int) -> "NCPoly":
        if isinstance(s, int):
            s = LaurentScalar.const(s)
        if len(s.terms) == 1:
            ((e, c),) = s.items()
            return NCPoly(self.ctx, kernel.scale(self._d, e[0], e[1], e[2], c))
        return NCPoly(self.ctx, kernel.scale_by(self._d, s.items()))

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            if isinstance(other, (int, LaurentScalar)):
                return self._d == NCPoly.scalar(self.ctx, other)._d
            return NotImplemented
        return self.ctx == other.ctx and self._d == other._d

    def __hash__(self):
        return hash((self.ctx, frozenset(self._d.items())))

    def substitute(self, image, ctx: Context | None = None) -> "NCPoly":
        """Algebra map given by image(triple) -> flat normalized dict."""
        return NCPoly(ctx or self.ctx, kernel.substitute(self._d, image))

    def with_ctx(self, ctx: Context) -> "NCPoly":
        """Reinterpret in a context containing every index used."""
        for k in self._d:
            for t in k[0]:
                ctx.check(t)
        return NCPoly(ctx, dict(self._d))

    def map_words(self, fn) -> "NCPoly":
        """Apply fn to every word and renormalize (used for relabelings)."""
        raw: dict = {}
        for (w, l, m, g), c in self._d.items():
            kernel.iadd(raw, {(fn(w), l, m, g): c})
        return NCPoly(self.ctx, kernel.normalize(raw))

    # -- serialization -------------------------------------------------
    def __str__(self):
        if not self._d:
            return "0"
        parts = []
        for w, s in self.terms().items():
            mono = " ".join(_fmt_gen(t) for t in w)
            cs = str(s)
            if not w:
                parts.append(cs if len(s.terms) == 1 else f"({cs})")
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            elif len(s.terms) == 1:
                parts.append(f"{cs}*{mono}")
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"NCPoly<{self.ctx}>({self})"

    def to_json(self) -> dict:
        return {
            "ctx": {"n": self.ctx.n, "variant": self.ctx.variant},
            "terms": [
                {"coeff": s.to_json(), "word": [list(t) for t in w]}
                for w, s in self.terms().items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "NCPoly":
        ctx = Context(int(data["ctx"]["n"]), data["ctx"]["variant"])
        return cls.from_terms(
            ctx,
            [(LaurentScalar.from_json(t["coeff"]), [tuple(g) for g in t["word"]]) for t in data["terms"]],
        )


def normalize(terms: Iterable[tuple[LaurentScalar | int, Sequence[Generator]]]) -> NCPoly:
    """Normalize a raw sum of Generator words, checking one shared context."""
    terms = list(terms)
    ctxs = {g.ctx for _, w in terms for g in w}
    if len(ctxs) > 1:
        raise ContextMismatch(f"mixed contexts: {sorted(map(str, ctxs))}")
    if not ctxs:
        raise ContextMismatch("cannot infer a context from scalar-only terms")
    (ctx,) = ctxs
    return NCPoly.from_terms(ctx, [(c, [g.triple for g in w]) for c, w in terms])


def poly_arith(p: NCPoly, q, op: str) -> NCPoly:
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    if op == "scale":
        return p.scale(q)
    raise ValueError(f"unknown op {op!r}")


def _split(word: Word, s: int, tail: bool):
    hits = [k for k, t in enumerate(word) if t[0] == s or t[1] == s]
    if tail:
        ok = hits == [len(word) - 1] and word[-1][0] != s
    else:
        ok = hits == [0] and word[0][1] != s
    return ok


def connect(P: NCPoly, Q: NCPoly) -> NCPoly:
    """P * Q: splice a_{i,s}^x ... with a_{s,j}^y into a_{ij}^{x+y}."""
    P._same(Q)
    s = P.ctx.sentinel
    if s is None:
        raise NotConnectable("connect needs the plus or minus algebra")
    for k in P._d:
        if not _split(k[0], s, True):
            raise NotConnectable(f"left term {_fmt_word(k[0])} does not end in one sentinel generator")
    for k in Q._d:
        if not _split(k[0], s, False):
            raise NotConnectable(f"right term {_fmt_word(k[0])} does not start with one sentinel generator")
    raw: dict = {}
    for (w1, l1, m1, g1), c1 in P._d.items():
        i, _, x = w1[-1]
        head = w1[:-1]
        for (w2, l2, m2, g2), c2 in Q._d.items():
            _, j, y = w2[0]
            k = (head + ((i, j, x + y),) + w2[1:], l1 + l2, m1 + m2, g1 + g2)
            v = raw.get(k, 0) + c1 * c2
            if v:
                raw[k] = v
            else:
                del raw[k]
    return NCPoly(P.ctx.core(), kernel.normalize(raw))


def _fmt_word(w: Word) -> str:
    return " ".join(_fmt_gen(t) for t in w) or "1"
