"""Augmentation numbers: count morphisms HC_0 (x) Z_d -> Z_d.

Z_d is commutative, so each relation is evaluated as a commutative
polynomial in the free variables v_1..v_{V}. The search is exhaustive
and vectorized over blocks of assignments that share a prefix.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import SearchTooLarge
from .ring import Specialization
from .torus import Presentation

DEFAULT_CAP = 10**8
BLOCK = 1 << 18


@dataclass(frozen=True)
class AugQuery:
    source: Presentation
    d: int
    lam: int
    mu: int
    gamma: int


# compiled relation: list of (coef mod d, exponent vector over v_1..v_V)
Compiled = list[list[tuple[int, tuple[int, ...]]]]


def compile_relations(pres: Presentation, sp: Specialization) -> Compiled:
    V = pres.variables
    out: Compiled = []
    for r in pres.relations:
        acc: dict[tuple[int, ...], int] = {}
        for w, s in r.terms().items():
            ex = [0] * V
            for t in w:
                x = t[2]
                if not 1 <= x <= V:
                    raise ValueError(f"variable v{x} outside v1..v{V}")
                ex[x - 1] += 1
            key = tuple(ex)
            acc[key] = (acc.get(key, 0) + sp.value(s)) % sp.d
        terms = [(c, e) for e, c in sorted(acc.items()) if c]
        out.append(terms)
    return out


def _block_count(args) -> int:
    comp, d, V, prefixes, tail = args
    if tail:
        grid = np.indices((d,) * tail, dtype=np.int64).reshape(tail, -1)
    else:
        grid = np.zeros((0, 1), dtype=np.int64)
    size = grid.shape[1]
    total = 0
    for pre in prefixes:
        cols = [np.full(size, v, dtype=np.int64) for v in pre] + [grid[k] for k in range(tail)]
        powers: dict[tuple[int, int], np.ndarray] = {}

        def pw(var: int, e: int) -> np.ndarray:
            key = (var, e)
            if key not in powers:
                base = cols[var]
                acc = np.ones(size, dtype=np.int64)
                for _ in range(e):
                    acc = (acc * base) % d
                powers[key] = acc
            return powers[key]

        alive = np.ones(size, dtype=bool)
        for terms in comp:
            val = np.zeros(size, dtype=np.int64)
            for c, ex in terms:
                t = np.full(size, c, dtype=np.int64)
                for var, e in enumerate(ex):
                    if e:
                        t = (t * pw(var, e)) % d
                val = (val + t) % d
            alive &= val == 0
            if not alive.any():
                break
        total += int(alive.sum())
    return total


def count_compiled(comp: Compiled, d: int, V: int, jobs: int = 1, cap: int = DEFAULT_CAP) -> int:
    if d ** V > cap:
        raise SearchTooLarge(f"{d}^{V} assignments exceed the cap {cap}")
    if any(not terms for terms in comp):
        comp = [t for t in comp if t]
    tail = V
    while tail > 0 and d ** tail > BLOCK:
        tail -= 1
    prefixes = list(itertools.product(range(d), repeat=V - tail))
    if jobs > 1 and len(prefixes) > 1:
        parts = [prefixes[k::jobs] for k in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return sum(ex.map(_block_count, [(comp, d, V, p, tail) for p in parts if p]))
    return _block_count((comp, d, V, prefixes, tail))


def count_augmentations(query: AugQuery, jobs: int = 1, cap: int = DEFAULT_CAP) -> int:
    sp = Specialization(query.d, query.lam, query.mu, query.gamma)
    pres = query.source
    return count_compiled(compile_relations(pres, sp), sp.d, pres.variables, jobs, cap)


def evaluate(pres: Presentation, sp: Specialization, values: dict[int, int]) -> list[int]:
    """Residues of every relation at v_x = values[x] (x >= 1)."""
    out = []
    for terms in compile_relations(pres, sp):
        tot = 0
        for c, ex in terms:
            t = c
            for k, e in enumerate(ex):
                t = t * pow(values[k + 1], e, sp.d)
            tot += t
        out.append(tot % sp.d)
    return out


def constant_augmentation_check(pres: Presentation, d: int, gamma: int) -> bool:
    """Does v_x -> 2*gamma (all x) kill every relation at l = m = 1?"""
    sp = Specialization(d, 1, 1, gamma)
    vals = {x: (2 * gamma) % d for x in range(1, pres.variables + 1)}
    return all(v == 0 for v in evaluate(pres, sp, vals))
