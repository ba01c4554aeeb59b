"""Finite presentations of HC_0 for braids whose plus-action is monomial.

When Phi+_beta sends every a_{i0}^x to a unit times a single a_{k,0}^z
(and likewise for a_{0j}^y), families 3 and 4 become rewrite rules
that move any a_ij^x to a scalar times a_11^{x'}, and a_11 is periodic
in its exponent. Every generator is then a_11^x with 0 <= x < period,
a_11^0 being the scalar (1+m)g. The torus braids (a0 ... a_{p-1})^q are
the main example; for them the rewriting has the closed form via g/h.

Presentation variables are stored as core n=1 generators a[1,1]^x and
printed as v_x.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd
from typing import Callable

from . import kernel
from .action import LambdaMatrix, word_image
from .algebra import Context, NCPoly
from .braid import BraidWord, is_knot, torus_braid
from .errors import NoSolution, NotKnot, NotMonomial, Unstable
from .ring import LOOP, LaurentScalar, ONE
from .relations import relation

DEFAULT_PROBE = range(-3, 4)
MAX_DOUBLINGS = 4
VAR_CTX = Context(1, "core")


@dataclass(frozen=True)
class Step:
    target: int
    unit: LaurentScalar
    shift: int


@dataclass
class ClosureData:
    """Monomial plus-action of a braid.

    rows[i]: Phi+(a_{i0}^x) = unit * a_{target,0}^{x - shift}
    cols[j]: Phi+(a_{0j}^y) = unit * a_{0,target}^{y + shift}
    """

    beta: BraidWord
    rows: dict[int, Step]
    cols: dict[int, Step]

    @property
    def n(self) -> int:
        return self.beta.strands

    def row_period(self) -> tuple[int, int]:
        """(P, G): orbit length of index 1 and total exponent shift."""
        i, P, G = 1, 0, 0
        while True:
            G += self.rows[i].shift
            i = self.rows[i].target
            P += 1
            if i == 1:
                return P, G

    def s(self, i: int) -> int | None:
        """mu exponent of the row unit, when it is a pure mu power."""
        u = self.rows[i].unit.terms
        if len(u) == 1:
            ((e, c),) = u.items()
            if c == 1 and e[0] == 0 and e[2] == 0:
                return e[1]
        return None


def _monomial(img: dict, where: str) -> tuple[tuple[int, int, int], LaurentScalar]:
    if len(img) != 1:
        raise NotMonomial(f"{where} has {len(img)} terms")
    ((w, l, m, g), c), = img.items()
    if len(w) != 1 or c not in (1, -1):
        raise NotMonomial(f"{where} is not a unit times one generator")
    return w[0], LaurentScalar.mono(l, m, g, c)


def detect_closure(beta: BraidWord, probe=DEFAULT_PROBE) -> ClosureData:
    if not is_knot(beta):
        raise NotKnot(f"closure of {beta or 'the empty braid'} on {beta.strands} strands is not a knot")
    n = beta.strands
    ctx = Context(n, "plus")
    rows: dict[int, Step] = {}
    cols: dict[int, Step] = {}
    for i in range(1, n + 1):
        for side, table in (("row", rows), ("col", cols)):
            seen = None
            for x in probe:
                gen = (i, 0, x) if side == "row" else (0, i, x)
                img = word_image(beta, ctx, gen).flat
                (a, b, z), unit = _monomial(img, f"Phi+(a[{gen[0]},{gen[1]}]^{x})")
                if side == "row":
                    if b != 0 or a == 0:
                        raise NotMonomial(f"row image of a[{i},0]^{x} is not a row sentinel")
                    step = Step(a, unit, x - z)
                else:
                    if a != 0 or b == 0:
                        raise NotMonomial(f"column image of a[0,{i}]^{x} is not a column sentinel")
                    step = Step(b, unit, z - x)
                if seen is not None and step != seen:
                    raise NotMonomial(f"{side} {i}: shape changes across the probe window")
                seen = step
            table[i] = seen
    return ClosureData(beta, rows, cols)


# -- g/h bookkeeping for torus braids -----------------------------------

def g_h(i: int, k: int, p: int, q: int) -> tuple[int, int]:
    g = h = 0
    for r in range(k):
        v = (i + r * q) % p
        g += (v + q) // p
        h += v == 0
    return g, h


def _c(f: int) -> LaurentScalar:
    return LaurentScalar.mono(l=1, m=-f)


def _power(s: LaurentScalar, k: int) -> LaurentScalar:
    return s ** k


def rewrite_to_core(i: int, j: int, x: int, p: int, q: int, f: int) -> tuple[LaurentScalar, int]:
    """b_ij^x (b_ij = a_{i+1,j+1}) as scalar * b_00^{x'} with 0 <= x' < q."""
    if q < 1 or gcd(p, q) != 1:
        raise NoSolution(f"gcd({p},{q}) != 1 or q < 1")
    k1 = next(k for k in range(p) if (k * q) % p == i)
    k2 = next(k for k in range(p) if (k * q) % p == j)
    g1, h1 = g_h(0, k1, p, q)
    g2, h2 = g_h(0, k2, p, q)
    c = _c(f)
    scal = LaurentScalar.mono(m=g2 - g1) * _power(c, h2 - h1)
    e = x + g1 - g2
    # b00^{e} = (m^q c)^t b00^{e - t q}
    t = e // q
    scal = scal * (LaurentScalar.mono(m=q) * c) ** t
    return scal, e - t * q


def orbit_rewriter(cd: ClosureData, f: int, p: int = 1, q: int = 1) -> tuple[Callable, int]:
    """Rewrite a_ij^x to (scalar, x') by walking the row and column orbits.

    Returns the rewriter and the period G > 0 of a_11.
    """
    lam = LambdaMatrix(f, p, q)
    n = cd.n
    rows = {i: (s.target, lam.left(i) * s.unit, s.shift) for i, s in cd.rows.items()}
    cols = {j: (s.target, lam.right_inverse(j) * s.unit, s.shift) for j, s in cd.cols.items()}
    U, G, i = ONE, 0, 1
    while True:
        k, u, t = rows[i]
        U, G, i = U * u, G + t, k
        if i == 1:
            break
    if G == 0:
        raise NotMonomial("a_11 is not periodic in its exponent; the closure data gives no finite presentation")
    if G < 0:
        U, G = U.inverse(), -G

    def rw(i: int, j: int, x: int) -> tuple[LaurentScalar, int]:
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"a[{i},{j}] outside 1..{n}")
        s = ONE
        while i != 1:
            k, u, t = rows[i]
            s, x, i = s * u, x - t, k
        while j != 1:
            k, u, t = cols[j]
            s, x, j = s * u, x + t, k
        m = x // G
        return s * U ** m, x - m * G

    return rw, G


# -- presentations -------------------------------------------------------

@dataclass
class Presentation:
    f: int
    period: int
    relations: list[NCPoly] = field(default_factory=list)
    p: int | None = None
    q: int | None = None
    braid: BraidWord | None = None
    window: int = 0

    @property
    def variables(self) -> int:
        return self.period - 1

    def to_json(self) -> dict:
        d = {
            "p": self.p,
            "q": self.q,
            "f": self.f,
            "variables": self.variables,
            "relations": [relation_to_json(r) for r in self.relations],
        }
        if self.braid is not None and self.p is None:
            d["braid"] = str(self.braid)
            d["strands"] = self.braid.strands
        return d

    @classmethod
    def from_json(cls, data: dict) -> "Presentation":
        rels = [relation_from_json(r) for r in data["relations"]]
        return cls(f=int(data.get("f", 0)), period=int(data["variables"]) + 1,
                   relations=rels, p=data.get("p"), q=data.get("q"))

    def to_text(self) -> str:
        head = f"# torus ({self.p},{self.q})" if self.p is not None else f"# braid {self.braid}"
        lines = [f"{head}  framing: {self.f}  variables: v1..v{self.variables} (v0 = (1+m)*g)"]
        lines += [format_relation(r) + " = 0" for r in self.relations]
        return "\n".join(lines) + "\n"


def relation_to_json(r: NCPoly) -> dict:
    return {"terms": [{"coeff": s.to_json(), "vars": [t[2] for t in w]} for w, s in r.terms().items()]}


def relation_from_json(d: dict) -> NCPoly:
    return NCPoly.from_terms(VAR_CTX, [(LaurentScalar.from_json(t["coeff"]), [(1, 1, v) for v in t["vars"]])
                                       for t in d["terms"]])


def format_relation(r: NCPoly) -> str:
    s = str(r)
    return re.sub(r"a\[1,1\]\^(-?\d+)", r"v\1", s)


def canonical(r: NCPoly) -> NCPoly:
    """Representative of r up to unit multiples on the left."""
    if r.is_zero():
        return r
    w = r.words()[0]
    coef = r.coeff(w)
    (e, c), = list(coef.items())[:1]
    sign = 1 if c > 0 else -1
    return r.scale(LaurentScalar.mono(-e[0], -e[1], -e[2], sign))


def _rewrite_poly(poly: NCPoly, rw) -> NCPoly:
    cache: dict = {}

    def image(t):
        hit = cache.get(t)
        if hit is None:
            s, x = rw(*t)
            hit = NCPoly.gen(VAR_CTX, 1, 1, x).scale(s).flat
            cache[t] = hit
        return hit

    return poly.substitute(image, VAR_CTX)


def _collect(beta: BraidWord, f: int, rw, W: int, families=(1, 2, 3, 4)) -> set:
    n = beta.strands
    out: set = set()
    for fam in families:
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for x in range(W + 1):
                    for y in range(W + 1):
                        r = _rewrite_poly(relation(beta, f, 1, 1, fam, i, j, x, y), rw)
                        if not r.is_zero():
                            out.add(canonical(r))
    # a_ii^0 is the scalar (1+m)g; its rewritten form must agree
    for i in range(2, n + 1):
        s, x = rw(i, i, 0)
        r = NCPoly.gen(VAR_CTX, 1, 1, x).scale(s) - NCPoly.scalar(VAR_CTX, LOOP)
        if not r.is_zero():
            out.add(canonical(r))
    return out


def _sort(rels: set) -> list[NCPoly]:
    return sorted(rels, key=lambda r: (len(r), [ (len(w), w) for w in r.words()], str(r)))


def _stabilize(beta: BraidWord, f: int, rw, W0: int) -> tuple[set, int]:
    W = W0
    cur = _collect(beta, f, rw, W)
    for _ in range(MAX_DOUBLINGS):
        W2 = 2 * W
        nxt = _collect(beta, f, rw, W2)
        if nxt == cur:
            return cur, W
        cur, W = nxt, W2
    raise Unstable(f"relation set still growing at window {W}")


def finite_presentation(p: int, q: int, f: int, probe: int | None = None) -> Presentation:
    if p < 1 or q < 1 or gcd(p, q) != 1:
        raise NoSolution(f"need p, q >= 1 with gcd(p,q) = 1 (got {p},{q})")
    beta = torus_braid(p, q)

    def rw(i, j, x):
        return rewrite_to_core(i - 1, j - 1, x, p, q, f)

    rels, W = _stabilize(beta, f, rw, probe if probe is not None else p + q)
    return Presentation(f=f, period=q, relations=_sort(rels), p=p, q=q, braid=beta, window=W)


def braid_presentation(beta: BraidWord, f: int, probe: int | None = None) -> Presentation:
    """Presentation for any braid with monomial closure data."""
    cd = detect_closure(beta)
    rw, G = orbit_rewriter(cd, f)
    rels, W = _stabilize(beta, f, rw, probe if probe is not None else beta.strands + G)
    return Presentation(f=f, period=G, relations=_sort(rels), braid=beta, window=W)
