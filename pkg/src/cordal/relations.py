"""Generators of the defining ideal of HC_0(beta; f; p, q) over a window.

Families 1 and 2 come from the minus algebra, 3 and 4 from the plus
algebra:

    1: a_ij^{x+y} - c_i  Phi-(a_{i,n+1}^x) * a_{n+1,j}^y
    2: a_ij^{x+y} - c_j^-1 a_{i,n+1}^x * Phi-(a_{n+1,j}^y)
    3, 4: the same with Phi+ and the sentinel 0

with c_i = l^{[i=p]} m^{-f[i=q]}. Relations are emitted raw.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .action import LambdaMatrix, word_image
from .algebra import Context, NCPoly, connect
from .braid import BraidWord, is_knot

FAMILIES = (1, 2, 3, 4)
DEFAULT_WINDOW = 3


def relation(beta: BraidWord, f: int, p: int, q: int, family: int,
             i: int, j: int, x: int, y: int) -> NCPoly:
    n = beta.strands
    if family not in FAMILIES:
        raise ValueError(f"family must be 1..4, got {family}")
    for v in (p, q, i, j):
        if not 1 <= v <= n:
            raise IndexError(f"index {v} outside 1..{n}")
    lam = LambdaMatrix(f, p, q)
    variant = "minus" if family <= 2 else "plus"
    ctx = Context(n, variant)
    s = ctx.sentinel
    core = Context(n, "core")
    lhs = NCPoly.gen(core, i, j, x + y)
    if family in (1, 3):
        img = word_image(beta, ctx, (i, s, x))
        rhs = connect(img, NCPoly.gen(ctx, s, j, y)).scale(lam.left(i))
    else:
        img = word_image(beta, ctx, (s, j, y))
        rhs = connect(NCPoly.gen(ctx, i, s, x), img).scale(lam.right_inverse(j))
    return lhs - rhs


@dataclass
class Relation:
    family: int
    i: int
    j: int
    x: int
    y: int
    poly: NCPoly

    def to_json(self) -> dict:
        return {"family": self.family, "i": self.i, "j": self.j, "x": self.x, "y": self.y,
                "poly": self.poly.to_json()}


@dataclass
class RelationSet:
    braid: BraidWord
    f: int
    window: int
    p: int = 1
    q: int = 1
    relations: list[Relation] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "braid": str(self.braid),
            "strands": self.braid.strands,
            "framing": self.f,
            "window": self.window,
            "relations": [r.to_json() for r in self.relations],
        }

    def to_text(self) -> str:
        lines = [f"# braid: {self.braid or '(empty)'}  strands: {self.braid.strands}  "
                 f"framing: {self.f}  window: {self.window}"]
        for r in self.relations:
            lines.append(f"F{r.family} i={r.i} j={r.j} x={r.x} y={r.y}: {r.poly}")
        return "\n".join(lines) + "\n"

    def nonzero(self) -> list[Relation]:
        return [r for r in self.relations if not r.poly.is_zero()]


def _chunk(args):
    beta, f, p, q, family, i, X = args
    n = beta.strands
    out = []
    for j in range(1, n + 1):
        for x in range(-X, X + 1):
            for y in range(-X, X + 1):
                out.append(Relation(family, i, j, x, y, relation(beta, f, p, q, family, i, j, x, y)))
    return out


def relation_set(beta: BraidWord, f: int, window: int = DEFAULT_WINDOW,
                 p: int = 1, q: int = 1, jobs: int = 1) -> RelationSet:
    if window < 0:
        raise ValueError("window must be non-negative")
    if not is_knot(beta):
        warnings.warn(f"closure of {beta or 'the empty braid'} on {beta.strands} strands is not a knot",
                      stacklevel=2)
    n = beta.strands
    tasks = [(beta, f, p, q, fam, i, window) for fam in FAMILIES for i in range(1, n + 1)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(_chunk, tasks))
    else:
        chunks = [_chunk(t) for t in tasks]
    rs = RelationSet(beta, f, window, p, q)
    for c in chunks:
        rs.relations.extend(c)
    return rs
