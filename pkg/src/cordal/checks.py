"""Executable property suites.

Each check returns a CheckResult; `cordal check --suite NAME` runs a
suite and exits nonzero on any failure. The default sizes are the ones
the acceptance tests use; `quick=True` shrinks the random samples.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from . import kernel
from .action import (
    LambdaMatrix,
    _word_image,
    a_times_right,
    clear_caches,
    extract_matrices,
    left_a_right,
    left_times_a,
    letter_image,
    word_image,
)
from .algebra import Context, NCPoly, connect
from .augment import AugQuery, constant_augmentation_check, count_augmentations
from .braid import (
    BraidWord,
    embed,
    free_reduce,
    invert,
    permutation,
    random_word,
    reflect,
    torus_braid,
)
from .relations import relation
from .ring import MU, LaurentScalar, Specialization, unit_triples


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        tail = f"  {self.detail}" if self.detail else ""
        return f"{tag} {self.name}{tail}"


def _run(name: str, fn: Callable[[], str | None]) -> CheckResult:
    t = time.perf_counter()
    try:
        bad = fn()
    except AssertionError as e:
        bad = str(e) or "assertion failed"
    return CheckResult(name, not bad, bad or "", time.perf_counter() - t)


def _gens(ctx: Context, X: int):
    for i in ctx.indices:
        for j in ctx.indices:
            for x in range(-X, X + 1):
                if i == j and x == 0:
                    continue
                yield (i, j, x)


VARIANTS = ("core", "minus", "plus")


# -- braid group -------------------------------------------------------------

def braid_homomorphisms(samples: int = 200, seed: int = 0) -> str | None:
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(1, 4)
        a = random_word(rng, n, rng.randint(0, 6))
        b = random_word(rng, n, rng.randint(0, 6))
        if reflect(a * b) != reflect(a) * reflect(b):
            return f"reflect not multiplicative on {a} | {b}"
        for side in ("plus", "minus"):
            if embed(a * b, side) != embed(a, side) * embed(b, side):
                return f"embed {side} not multiplicative on {a} | {b}"
        if free_reduce(reflect(reflect(a))) != free_reduce(a):
            return f"r(r(b)) != b for {a}"
        if free_reduce(reflect(embed(a, "plus"))) != free_reduce(embed(reflect(a), "minus")):
            return f"r e+ != e- r on {a}"
        pa, pb, pab = permutation(a), permutation(b), permutation(a * b)
        if pab != tuple(pa[v - 1] for v in pb):
            return f"permutation not a homomorphism on {a} | {b}"
    return None


# -- action ------------------------------------------------------------------

def inverse_letters(max_n: int = 3, X: int = 3) -> str | None:
    for n in range(1, max_n + 1):
        for variant in VARIANTS:
            ctx = Context(n, variant)
            for k in range(n):
                for s in (1, -1):
                    for t in _gens(ctx, X):
                        back = kernel.substitute(letter_image(k, s, t), lambda u: letter_image(k, -s, u))
                        if back != {((t,), 0, 0, 0): 1}:
                            return f"{variant} n={n}: a{k}^{s} then a{k}^{-s} moves {t}"
    return None


def artin_relations(n: int) -> list[tuple[BraidWord, BraidWord]]:
    """The defining relations of C_n as pairs of equal words."""
    out = []
    for i in range(n):
        for j in range(i + 2, n):
            out.append((BraidWord(n, ((i, 1), (j, 1))), BraidWord(n, ((j, 1), (i, 1)))))
    for i in range(1, n - 1):
        out.append((BraidWord(n, ((i, 1), (i + 1, 1), (i, 1))),
                    BraidWord(n, ((i + 1, 1), (i, 1), (i + 1, 1)))))
    if n >= 2:
        out.append((BraidWord(n, ((0, 1), (1, 1), (0, 1), (1, 1))),
                    BraidWord(n, ((1, 1), (0, 1), (1, 1), (0, 1)))))
    return out


def well_defined(max_n: int = 4, X: int = 2) -> str | None:
    for n in range(1, max_n + 1):
        for variant in VARIANTS:
            ctx = Context(n, variant)
            for u, v in artin_relations(n):
                for t in _gens(ctx, X):
                    if word_image(u, ctx, t) != word_image(v, ctx, t):
                        return f"{variant}: {u} vs {v} differ on {t}"
    return None


# Image sizes grow exponentially with the length of the underlying curve
# (a 32-letter curve already expands to ~60k terms), so random braids are
# drawn by rejection: every window generator's curve must stay short.
MAX_CURVE = 24
# Phi_b applied to entries of the b^-1 matrices expands products of
# images before they collapse to the identity, so this check needs less.
INVERSE_BUDGET = 12


def curve_cost(beta: BraidWord, X: int = 2) -> int:
    """Longest oracle curve (opaque letters only) over the generator window."""
    from .oracle import Layout, artin_word, generator_curve

    worst = 0
    for variant in VARIANTS:
        layout = Layout(beta.strands, variant)
        for t in _gens(Context(beta.strands, variant), X):
            c = artin_word(beta, generator_curve(layout, *t), layout)
            worst = max(worst, sum(p not in layout.transparent for p, _ in c.word))
    return worst


def _sample_braids(count: int, seed: int, max_n: int = 3, max_len: int = 6,
                   alpha0: bool = True, budget: int = MAX_CURVE) -> list[BraidWord]:
    rng = random.Random(seed)
    out: list[BraidWord] = []
    while len(out) < count:
        b = random_word(rng, rng.randint(1, max_n), rng.randint(0, max_len), alpha0)
        if curve_cost(b) <= budget:
            out.append(b)
    return out


def connect_law(count: int = 50, seed: int = 1, X: int = 1) -> str | None:
    """Phi(a_ij^{x+y}) = Phi+-(a_{i,s}^x) * Phi+-(a_{s,j}^y)."""
    for beta in _sample_braids(count, seed):
        n = beta.strands
        core = Context(n, "core")
        for variant in ("plus", "minus"):
            ctx = Context(n, variant)
            s = ctx.sentinel
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    for x in range(-X, X + 1):
                        for y in range(-X, X + 1):
                            lhs = word_image(beta, core, (i, j, x + y))
                            rhs = connect(word_image(beta, ctx, (i, s, x)), word_image(beta, ctx, (s, j, y)))
                            if lhs != rhs:
                                return f"{variant} {beta}: connect law fails at {(i, j, x, y)}"
        clear_caches()
    return None


def restriction(count: int = 50, seed: int = 10, X: int = 2) -> str | None:
    """Phi+ and Phi- agree with Phi on generators away from the sentinel."""
    for beta in _sample_braids(count, seed):
        n = beta.strands
        core = Context(n, "core")
        for t in _gens(core, X):
            base = word_image(beta, core, t).flat
            for variant in ("plus", "minus"):
                if word_image(beta, Context(n, variant), t).flat != base:
                    return f"{variant} {beta}: differs from core on {t}"
        clear_caches()
    return None


# -- sentinel matrices -------------------------------------------------------

def _phi(beta: BraidWord, P: NCPoly) -> dict:
    if not beta.letters:
        return P.flat
    letters = beta.letters
    return kernel.substitute(P.flat, lambda u: _word_image(letters, u))


def _flat_line(line) -> dict:
    return {kz: e.flat for kz, e in line.items()}


def composed_line(b1: BraidWord, b2: BraidWord, variant: str, side: str, i: int, x: int) -> dict:
    """Row (left) or column (right) (i, x) of the product formula for b1 b2."""
    L1, R1 = extract_matrices(b1, variant)
    L2, R2 = extract_matrices(b2, variant)
    acc: dict = {}
    if side == "left":
        # L_{b1 b2} = L_{b2}(Phi_{b1}) L_{b1}
        for (j, w), P in L2.line(i, x).items():
            head = _phi(b1, P)
            for (k, z), Q in L1.line(j, w).items():
                kernel.iadd(acc.setdefault((k, z), {}), kernel.mul(head, Q.flat))
    else:
        # R_{b1 b2} = R_{b1} R_{b2}(Phi_{b1})
        for (l, w), P in R2.line(i, x).items():
            tail = _phi(b1, P)
            for (k, z), Q in R1.line(l, w).items():
                kernel.iadd(acc.setdefault((k, z), {}), kernel.mul(Q.flat, tail))
    return {kz: d for kz, d in acc.items() if d}


def _split_braid(rng: random.Random, beta: BraidWord) -> tuple[BraidWord, BraidWord]:
    cut = rng.randint(0, len(beta))
    return BraidWord(beta.strands, beta.letters[:cut]), BraidWord(beta.strands, beta.letters[cut:])


def composition_laws(count: int = 50, seed: int = 2, X: int = 1) -> str | None:
    rng = random.Random(seed)
    for beta in _sample_braids(count, seed):
        b1, b2 = _split_braid(rng, beta)
        n = beta.strands
        for variant in ("plus", "minus"):
            L, R = extract_matrices(beta, variant)
            for side, M in (("left", L), ("right", R)):
                for i in range(1, n + 1):
                    for x in range(-X, X + 1):
                        if composed_line(b1, b2, variant, side, i, x) != _flat_line(M.line(i, x)):
                            return f"{variant}/{side} composition law fails for {b1} | {b2} at {(i, x)}"
        clear_caches()
    return None


def invertibility(count: int = 50, seed: int = 3, X: int = 1) -> str | None:
    """L_{b^-1}(Phi_b) L_b and R_b R_{b^-1}(Phi_b) are the identity."""
    for beta in _sample_braids(count, seed, budget=INVERSE_BUDGET):
        inv = invert(beta)
        n = beta.strands
        for variant in ("plus", "minus"):
            for side in ("left", "right"):
                for i in range(1, n + 1):
                    for x in range(-X, X + 1):
                        got = composed_line(beta, inv, variant, side, i, x)
                        if got != {(i, x): {((), 0, 0, 0): 1}}:
                            return f"{variant}/{side} inverse fails for {beta} at {(i, x)}"
        clear_caches()
    return None


def factorization(count: int = 50, seed: int = 4, X: int = 1) -> str | None:
    """Phi_b(A) = L- A R- = L+ A R+ entrywise."""
    for beta in _sample_braids(count, seed):
        n = beta.strands
        core = Context(n, "core")
        Lm, Rm = extract_matrices(beta, "minus")
        Lp, Rp = extract_matrices(beta, "plus")
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for x in range(-X, X + 1):
                    for y in range(-X, X + 1):
                        want = word_image(beta, core, (i, j, x + y))
                        if left_a_right(Lm, Rm, i, j, x, y) != want:
                            return f"L-AR- != Phi(A) for {beta} at {(i, j, x, y)}"
                        if left_a_right(Lp, Rp, i, j, x, y) != want:
                            return f"L+AR+ != Phi(A) for {beta} at {(i, j, x, y)}"
        clear_caches()
    return None


def alpha0_free(count: int = 50, seed: int = 5, X: int = 1) -> str | None:
    """Without a0 letters the plus and minus matrices act alike on A."""
    for beta in _sample_braids(count, seed, alpha0=False):
        n = beta.strands
        Lm, Rm = extract_matrices(beta, "minus")
        Lp, Rp = extract_matrices(beta, "plus")
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for x in range(-X, X + 1):
                    for y in range(-X, X + 1):
                        if left_times_a(Lp, i, j, x, y) != left_times_a(Lm, i, j, x, y):
                            return f"L+A != L-A for {beta} at {(i, j, x, y)}"
                        if a_times_right(Rp, i, j, x, y) != a_times_right(Rm, i, j, x, y):
                            return f"AR+ != AR- for {beta} at {(i, j, x, y)}"
        clear_caches()
    return None


def conjugation_identity(count: int = 20, seed: int = 6, X: int = 1) -> str | None:
    """a_ij^{x+y} - c_i c_j^-1 Phi(a_ij^{x+y}) = F1(i,j,x,y) + sum c_i L-_ik^{xz} F2(k,j,z,y)."""
    rng = random.Random(seed)
    for beta in _sample_braids(count, seed):
        n = beta.strands
        core = Context(n, "core")
        f, p, q = rng.randint(-2, 2), rng.randint(1, n), rng.randint(1, n)
        lam = LambdaMatrix(f, p, q)
        Lm, _ = extract_matrices(beta, "minus")
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for x in range(-X, X + 1):
                    for y in range(-X, X + 1):
                        a = NCPoly.gen(core, i, j, x + y)
                        lhs = a - word_image(beta, core, (i, j, x + y)).scale(lam.left(i) * lam.right_inverse(j))
                        rhs = relation(beta, f, p, q, 1, i, j, x, y)
                        for (k, z), e in Lm.line(i, x).items():
                            rhs = rhs + (e * relation(beta, f, p, q, 2, k, j, z, y)).scale(lam.left(i))
                        if lhs != rhs:
                            return f"conjugation identity fails for {beta} at {(i, j, x, y)}"
        clear_caches()
    return None


# -- scalars, polynomials and relations -------------------------------------

def _random_scalar(rng: random.Random) -> LaurentScalar:
    return LaurentScalar([((rng.randint(-2, 2), rng.randint(-2, 2), rng.randint(-2, 2)),
                           rng.randint(-3, 3)) for _ in range(rng.randint(0, 4))])


def ring_homomorphism(samples: int = 200, seed: int = 11) -> str | None:
    rng = random.Random(seed)
    for _ in range(samples):
        a, b = _random_scalar(rng), _random_scalar(rng)
        d = rng.choice((2, 3, 4, 5, 7, 9))
        sp = Specialization(d, *rng.choice(unit_triples(d)))
        if sp.value(a * b) != sp.value(a) * sp.value(b) % d:
            return f"specialize not multiplicative on {a} | {b} at {sp}"
        if sp.value(a + b) != (sp.value(a) + sp.value(b)) % d:
            return f"specialize not additive on {a} | {b} at {sp}"
        items = list(a.items())
        rng.shuffle(items)
        if LaurentScalar(items) != a or a + b != b + a or a * b != b * a:
            return f"scalar arithmetic depends on term order for {a}"
    return None


def _random_poly(rng: random.Random, ctx: Context, head=None, tail=None) -> NCPoly:
    core = range(1, ctx.n + 1)
    terms = []
    for _ in range(rng.randint(0, 3)):
        w = [(rng.choice(core), rng.choice(core), rng.randint(-1, 1)) for _ in range(rng.randint(0, 2))]
        if head is not None:
            w.insert(0, (head, rng.choice(core), rng.randint(-1, 1)))
        if tail is not None:
            w.append((rng.choice(core), tail, rng.randint(-1, 1)))
        terms.append((_random_scalar(rng), w))
    return NCPoly.from_terms(ctx, terms)


def algebra_laws(samples: int = 100, seed: int = 12) -> str | None:
    rng = random.Random(seed)
    for _ in range(samples):
        variant = rng.choice(("plus", "minus"))
        ctx = Context(rng.randint(1, 3), variant)
        s = ctx.sentinel
        p = _random_poly(rng, ctx)
        if NCPoly.from_terms(ctx, [(c, w) for w, c in p.terms().items()]) != p:
            return f"normalize is not idempotent on {p}"
        P1, P2 = _random_poly(rng, ctx, tail=s), _random_poly(rng, ctx, tail=s)
        Q1, Q2 = _random_poly(rng, ctx, head=s), _random_poly(rng, ctx, head=s)
        if connect(P1 + P2, Q1) != connect(P1, Q1) + connect(P2, Q1):
            return f"connect not additive on the left: {P1} | {P2} | {Q1}"
        if connect(P1, Q1 + Q2) != connect(P1, Q1) + connect(P1, Q2):
            return f"connect not additive on the right: {P1} | {Q1} | {Q2}"
    return None


def free_reduction_invariance(count: int = 10, seed: int = 13, X: int = 1) -> str | None:
    import warnings

    from .relations import relation_set

    rng = random.Random(seed)
    for beta in _sample_braids(count, seed, budget=INVERSE_BUDGET):
        n = beta.strands
        pos, k = rng.randint(0, len(beta)), rng.randrange(n)
        padded = BraidWord(n, beta.letters[:pos] + ((k, 1), (k, -1)) + beta.letters[pos:])
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            a = relation_set(beta, 0, X).relations
            b = relation_set(padded, 0, X).relations
        if [r.to_json() for r in a] != [r.to_json() for r in b]:
            return f"relations of {padded} differ from those of {beta}"
        clear_caches()
    return None


def corollary_expansion(count: int = 20, seed: int = 14, X: int = 1) -> str | None:
    """a_ij - Lam Phi(a_ij) Lam^-1 = F1_ij + Lam_i sum_k L_ik F2_kj."""
    for beta in _sample_braids(count, seed):
        n = beta.strands
        core = Context(n, "core")
        lam = LambdaMatrix(0)
        L, _ = extract_matrices(beta, "minus")
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for x in range(-X, X + 1):
                    for y in range(-X, X + 1):
                        img = word_image(beta, core, (i, j, x + y))
                        lhs = NCPoly.gen(core, i, j, x + y) - img.scale(lam.left(i) * lam.right_inverse(j))
                        acc = relation(beta, 0, 1, 1, 1, i, j, x, y).flat
                        for (k, z), e in L.line(i, x).items():
                            f2 = relation(beta, 0, 1, 1, 2, k, j, z, y).scale(lam.left(i))
                            acc = kernel.add(acc, kernel.mul(e.flat, f2.flat))
                        if lhs.flat != acc:
                            return f"{beta}: expansion fails at {(i, j, x, y)}"
        clear_caches()
    return None

# -- torus and augmentations ---------------------------------------------------

TORUS_CASES = ((1, 1), (1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2))


def rewriters_agree(X: int = 6) -> str | None:
    from .torus import detect_closure, orbit_rewriter, rewrite_to_core

    for p, q in TORUS_CASES:
        for f in (-1, 0, 2):
            rw, G = orbit_rewriter(detect_closure(torus_braid(p, q)), f)
            if G != q:
                return f"orbit period {G} != {q} for ({p},{q})"
            for i in range(1, p + 1):
                for j in range(1, p + 1):
                    for x in range(-X, X + 1):
                        if rw(i, j, x) != rewrite_to_core(i - 1, j - 1, x, p, q, f):
                            return f"rewriters differ on ({p},{q}) f={f} a[{i},{j}]^{x}"
    return None


def closure_closed_form(max_p: int = 4, max_q: int = 5) -> str | None:
    """Phi+ of b(p,q) on a_{i0}^x is mu^s a_{k,0}^{x-s}, k = (i-1+q) mod p + 1."""
    from math import gcd

    from .torus import detect_closure

    for p in range(1, max_p + 1):
        for q in range(1, max_q + 1):
            if gcd(p, q) != 1:
                continue
            cd = detect_closure(torus_braid(p, q))
            for i in range(1, p + 1):
                s = (i - 1 + q) // p
                want = ((i - 1 + q) % p + 1, MU ** s, s)
                step = cd.rows[i]
                if (step.target, step.unit, step.shift) != want:
                    return f"({p},{q}) row {i}: got {step}"
        clear_caches()
    return None


def round_trip(points: int = 6, X: int = 2) -> str | None:
    """Solutions of a presentation kill the unrewritten family 1-2 relations."""
    import itertools

    from .augment import evaluate
    from .torus import detect_closure, finite_presentation, orbit_rewriter

    grid = parameter_grid(points, seed=15, mods=(3, 5, 7))
    for p, q in TORUS_CASES:
        for f in (0, 1):
            pres = finite_presentation(p, q, f)
            rw, _ = orbit_rewriter(detect_closure(pres.braid), f)
            beta, n = pres.braid, p
            rels = [relation(beta, f, 1, 1, fam, i, j, x, y)
                    for fam in (1, 2) for i in range(1, n + 1) for j in range(1, n + 1)
                    for x in range(-X, X + 1) for y in range(-X, X + 1)]
            for d, lam, mu, gamma in grid:
                sp = Specialization(d, lam, mu, gamma)
                for vals in itertools.product(range(d), repeat=pres.variables):
                    values = dict(enumerate(vals, 1))
                    if any(evaluate(pres, sp, values)):
                        continue
                    values[0] = (1 + mu) * gamma % d

                    def value(t):
                        c, k = rw(*t)
                        return sp.value(c) * values[k] % d

                    for r in rels:
                        tot = 0
                        for w, c in r.terms().items():
                            term = sp.value(c)
                            for t in w:
                                term = term * value(t) % d
                            tot += term
                        if tot % d:
                            return f"({p},{q}) f={f} at {(d, lam, mu, gamma)} {vals}: {r} != 0"
    clear_caches()
    return None


def partition_independence(max_q: int = 5) -> str | None:
    from .augment import _block_count, compile_relations, count_compiled
    from .torus import finite_presentation

    for q in range(2, max_q + 1):
        pres = finite_presentation(1, q, 0)
        V = pres.variables
        for d, lam, mu, gamma in parameter_grid(5, seed=16):
            comp = compile_relations(pres, Specialization(d, lam, mu, gamma))
            whole = count_compiled(comp, d, V)
            split = sum(_block_count((comp, d, V, [(v,)], V - 1)) for v in range(d))
            if whole != split:
                return f"T(1,{q}) at {(d, lam, mu, gamma)}: {whole} != {split} after splitting"
    return None


def parameter_grid(points: int = 20, seed: int = 7, mods=(2, 3, 4, 5, 7)) -> list[tuple[int, int, int, int]]:
    grid = [(d,) + t for d in mods for t in unit_triples(d)]
    random.Random(seed).shuffle(grid)
    return grid[:points]


def markov_stabilization(max_p: int = 4, points: int = 20) -> str | None:
    from .torus import finite_presentation

    grid = parameter_grid(points)
    for f in (-1, 0, 1):
        for p in range(1, max_p + 1):
            P = finite_presentation(p, 1, f)
            Q = finite_presentation(1, 1, f + p - 1)
            for g in grid:
                a, b = count_augmentations(AugQuery(P, *g)), count_augmentations(AugQuery(Q, *g))
                if a != b:
                    return f"Aug(b({p},1);{f}) = {a} but Aug(b(1,1);{f + p - 1}) = {b} at {g}"
    return None


def torus_32_vs_12(points: int = 20) -> str | None:
    from .torus import finite_presentation

    grid = parameter_grid(points)
    for f in (-1, 0, 1):
        P, Q = finite_presentation(3, 2, f), finite_presentation(1, 2, f)
        for g in grid:
            a, b = count_augmentations(AugQuery(P, *g)), count_augmentations(AugQuery(Q, *g))
            if a != b:
                return f"(3,2) vs (1,2) at f={f}, {g}: {a} != {b}"
    return None


def inverse_symmetry(points: int = 20) -> str | None:
    from .errors import Refusal
    from .torus import braid_presentation

    grid = parameter_grid(points)
    for p, q in TORUS_CASES:
        B = torus_braid(p, q)
        for f in (-1, 0, 2):
            try:
                P, Pi = braid_presentation(B, -f), braid_presentation(invert(B), f)
            except Refusal:
                continue
            for d, lam, mu, gamma in grid:
                a = count_augmentations(AugQuery(Pi, d, lam, mu, gamma))
                b = count_augmentations(AugQuery(P, d, pow(lam, -1, d), mu, gamma))
                if a != b:
                    return f"inverse symmetry fails for ({p},{q}) f={f} at {(d, lam, mu, gamma)}"
    return None


def constant_augmentation(max_q: int = 6) -> str | None:
    from .torus import finite_presentation

    for q in range(1, max_q + 1):
        for f in (0,):
            P = finite_presentation(1, q, f)
            for d in (2, 3, 4, 5, 7):
                for g in (u for u in range(1, d) if _unit(u, d)):
                    if not constant_augmentation_check(P, d, g):
                        return f"constant map fails on T(1,{q}) mod {d}, g={g}"
                    if count_augmentations(AugQuery(P, d, 1, 1, g)) < 1:
                        return f"no augmentation for T(1,{q}) mod {d}, g={g}"
    return None


def _unit(u: int, d: int) -> bool:
    from math import gcd

    return gcd(u, d) == 1


# -- oracle ------------------------------------------------------------------

def oracle_calibration() -> str | None:
    from .oracle import CONVENTION, convention_matches

    if not convention_matches(CONVENTION):
        return "pinned convention no longer reproduces the single-letter action"
    return None


def oracle_random(count: int = 200, seed: int = 8, X: int = 2) -> str | None:
    from .oracle import oracle_diff

    for beta in _sample_braids(count, seed):
        bad = oracle_diff(beta, X)
        clear_caches()
        if bad:
            m = bad[0]
            return f"oracle disagrees on {beta} ({beta.strands} strands) {m.variant} {(m.i, m.j, m.x)}"
    return None


def oracle_artin_relations(max_n: int = 4, X: int = 2) -> str | None:
    from .oracle import Layout, artin_word, generator_curve

    for n in range(1, max_n + 1):
        for variant in VARIANTS:
            layout = Layout(n, variant)
            ctx = Context(n, variant)
            for u, v in artin_relations(n):
                for t in _gens(ctx, X):
                    c = generator_curve(layout, *t)
                    if artin_word(u, c, layout) != artin_word(v, c, layout):
                        return f"{variant}: curves differ under {u} vs {v} on {t}"
    return None


def oracle_skein(samples: int = 100, seed: int = 9) -> str | None:
    """psi(w3 w4) + psi(w3 e_k w4) = (1/g) psi(w3) psi(w4)."""
    from .oracle import CurveWord, Layout, psi
    from .ring import LaurentScalar

    rng = random.Random(seed)
    inv_g = LaurentScalar.mono(g=-1)
    for _ in range(samples):
        n = rng.randint(1, 3)
        layout = Layout(n, "core")
        i, j, k = (rng.randint(1, n) for _ in range(3))

        def rand_word():
            return tuple((rng.randint(0, n), rng.choice((1, -1))) for _ in range(rng.randint(0, 5)))

        w3, w4 = rand_word(), rand_word()
        lhs = psi(CurveWord(i, j, w3 + w4), layout) + psi(CurveWord(i, j, w3 + ((k, 1),) + w4), layout)
        rhs = (psi(CurveWord(i, k, w3), layout) * psi(CurveWord(k, j, w4), layout)).scale(inv_g)
        if lhs != rhs:
            return f"skein identity fails for {w3} | e{k} | {w4} from {i} to {j}"
    return None


# -- suites --------------------------------------------------------------------

def _suites(quick: bool) -> dict[str, list[tuple[str, Callable[[], str | None]]]]:
    m = 10 if quick else 50
    return {
        "ring": [("specialization homomorphism", lambda: ring_homomorphism(40 if quick else 200))],
        "algebra": [("normal form and connect bilinearity", lambda: algebra_laws(20 if quick else 100))],
        "braid": [("braid homomorphisms and r", lambda: braid_homomorphisms(40 if quick else 200))],
        "action": [
            ("inverse letters", lambda: inverse_letters(2 if quick else 3)),
            ("C_n relations", lambda: well_defined(3 if quick else 4)),
            ("connect law", lambda: connect_law(m // 2)),
            ("restriction to core", lambda: restriction(m)),
        ],
        "matrices": [
            ("composition laws", lambda: composition_laws(m)),
            ("invertibility", lambda: invertibility(m)),
            ("factorization", lambda: factorization(m)),
            ("a0-free plus/minus agreement", lambda: alpha0_free(m)),
            ("conjugation identity", lambda: conjugation_identity(m // 2)),
        ],
        "relations": [
            ("free reduction invariance", lambda: free_reduction_invariance(m // 5)),
            ("family 1/2 expansion of A - Lam Phi(A) Lam^-1", lambda: corollary_expansion(m // 2)),
        ],
        "torus": [
            ("g/h vs orbit rewriter", rewriters_agree),
            ("closure data closed form", closure_closed_form),
            ("round trip at evaluation level", lambda: round_trip(2 if quick else 6)),
        ],
        "augment": [
            ("Markov stabilization", lambda: markov_stabilization(3 if quick else 4)),
            ("(3,2) vs (1,2)", torus_32_vs_12),
            ("inverse symmetry", inverse_symmetry),
            ("constant augmentation", constant_augmentation),
            ("partition independence", partition_independence),
        ],
        "oracle": [
            ("oracle calibration", oracle_calibration),
            ("oracle random words", lambda: oracle_random(20 if quick else 200)),
            ("oracle C_n relations", lambda: oracle_artin_relations(3 if quick else 4)),
            ("oracle skein identity", oracle_skein),
        ],
    }


SUITES = ("ring", "algebra", "braid", "action", "matrices", "relations", "torus", "augment", "oracle")


def run_suite(name: str, quick: bool = False) -> list[CheckResult]:
    suites = _suites(quick)
    names = SUITES if name == "all" else (name,)
    out = []
    for s in names:
        if s not in suites:
            raise ValueError(f"unknown suite {s!r}; choose from {', '.join(SUITES)} or all")
        for label, fn in suites[s]:
            out.append(_run(f"{s}: {label}", fn))
    return out
