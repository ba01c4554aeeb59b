"""The braid actions Phi, Phi^+ and Phi^- of C_n and the sentinel matrices.

One letter-on-generator routine serves all three variants: alpha_k
treats any index outside {k, k+1} (including the sentinels 0 and n+1)
as a spectator, and alpha_0 has extra rules for the plus sentinel 0.
Inverse letters use closed forms obtained by solving the forward
substitution; tests sweep both compositions against the identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from threading import Lock

from . import kernel
from .algebra import Context, NCPoly
from .braid import BraidWord
from .errors import BraidIndexError, MalformedImage
from .ring import LaurentScalar

# coefficient exponents (l, m, g)
_1 = (0, 0, 0)
_M = (0, 1, 0)
_iM = (0, -1, 0)
_iG = (0, 0, -1)
_iGM = (0, -1, -1)
_iG2M = (0, -1, -2)


def _alpha_k(k: int, i: int, j: int, x: int):
    """Forward Phi(alpha_k), k >= 1, as (sign, exps, word) terms."""
    K, L = k, k + 1
    if i == K:
        if j == K:
            return [
                (1, _1, ((L, L, x),)),
                (-1, _iG, ((L, K, x), (K, L, 0))),
                (-1, _iGM, ((L, K, 0), (K, L, x))),
                (1, _iG2M, ((L, K, 0), (K, K, x), (K, L, 0))),
            ]
        if j == L:
            return [(-1, _1, ((L, K, x),)), (1, _iGM, ((L, K, 0), (K, K, x)))]
        return [(-1, _1, ((L, j, x),)), (1, _iGM, ((L, K, 0), (K, j, x)))]
    if i == L:
        if j == K:
            return [(-1, _1, ((K, L, x),)), (1, _iG, ((K, K, x), (K, L, 0)))]
        if j == L:
            return [(1, _1, ((K, K, x),))]
        return [(1, _1, ((K, j, x),))]
    if j == K:
        return [(-1, _1, ((i, L, x),)), (1, _iG, ((i, K, x), (K, L, 0)))]
    if j == L:
        return [(1, _1, ((i, K, x),))]
    return [(1, _1, ((i, j, x),))]


def _alpha_k_inv(k: int, i: int, j: int, x: int):
    K, L = k, k + 1
    if i == K:
        if j == K:
            return [(1, _1, ((L, L, x),))]
        if j == L:
            return [(-1, _1, ((L, K, x),)), (1, _iGM, ((L, L, x), (L, K, 0)))]
        return [(1, _1, ((L, j, x),))]
    if i == L:
        if j == K:
            return [(-1, _1, ((K, L, x),)), (1, _iG, ((K, L, 0), (L, L, x)))]
        if j == L:
            return [
                (1, _1, ((K, K, x),)),
                (-1, _iGM, ((K, L, x), (L, K, 0))),
                (-1, _iG, ((K, L, 0), (L, K, x))),
                (1, _iG2M, ((K, L, 0), (L, L, x), (L, K, 0))),
            ]
        return [(-1, _1, ((K, j, x),)), (1, _iG, ((K, L, 0), (L, j, x)))]
    if j == K:
        return [(1, _1, ((i, L, x),))]
    if j == L:
        return [(-1, _1, ((i, K, x),)), (1, _iGM, ((i, L, x), (L, K, 0)))]
    return [(1, _1, ((i, j, x),))]


def _alpha_0(i: int, j: int, x: int):
    if i == 0 or j == 0:
        if i == 0 and j == 0:
            return [(1, _1, ((0, 0, x),))]
        if i == 0:
            if j == 1:
                return [(1, _iM, ((0, 1, x + 1),))]
            return [(-1, _1, ((0, j, x),)), (1, _iGM, ((0, 1, x + 1), (1, j, -1)))]
        if i == 1:
            return [(1, _M, ((1, 0, x - 1),))]
        return [(-1, _1, ((i, 0, x),)), (1, _iG, ((i, 1, 1), (1, 0, x - 1)))]
    if i == 1:
        if j == 1:
            return [(1, _1, ((1, 1, x),))]
        return [(-1, _M, ((1, j, x - 1),)), (1, _iG, ((1, 1, x), (1, j, -1)))]
    if j == 1:
        return [(-1, _iM, ((i, 1, x + 1),)), (1, _iGM, ((i, 1, 1), (1, 1, x)))]
    return [
        (1, _1, ((i, j, x),)),
        (-1, _iGM, ((i, 1, x + 1), (1, j, -1))),
        (-1, _iG, ((i, 1, 1), (1, j, x - 1))),
        (1, _iG2M, ((i, 1, 1), (1, 1, x), (1, j, -1))),
    ]


def _alpha_0_inv(i: int, j: int, x: int):
    if i == 0 or j == 0:
        if i == 0 and j == 0:
            return [(1, _1, ((0, 0, x),))]
        if i == 0:
            if j == 1:
                return [(1, _M, ((0, 1, x - 1),))]
            return [(-1, _1, ((0, j, x),)), (1, _iG, ((0, 1, x), (1, j, 0)))]
        if i == 1:
            return [(1, _iM, ((1, 0, x + 1),))]
        return [(-1, _1, ((i, 0, x),)), (1, _iGM, ((i, 1, 0), (1, 0, x)))]
    if i == 1:
        if j == 1:
            return [(1, _1, ((1, 1, x),))]
        return [(-1, _iM, ((1, j, x + 1),)), (1, _iGM, ((1, 1, x + 1), (1, j, 0)))]
    if j == 1:
        return [(-1, _M, ((i, 1, x - 1),)), (1, _iG, ((i, 1, 0), (1, 1, x - 1)))]
    return [
        (1, _1, ((i, j, x),)),
        (-1, _iG, ((i, 1, x), (1, j, 0))),
        (-1, _iGM, ((i, 1, 0), (1, j, x))),
        (1, _iG2M, ((i, 1, 0), (1, 1, x), (1, j, 0))),
    ]


@lru_cache(maxsize=1 << 16)
def letter_image(k: int, sign: int, t: tuple[int, int, int]) -> dict:
    """Flat normalized image of the generator t under Phi(alpha_k^sign)."""
    i, j, x = t
    if k == 0:
        terms = _alpha_0(i, j, x) if sign > 0 else _alpha_0_inv(i, j, x)
    else:
        terms = _alpha_k(k, i, j, x) if sign > 0 else _alpha_k_inv(k, i, j, x)
    raw: dict = {}
    for c, e, w in terms:
        kernel.iadd(raw, {(w, e[0], e[1], e[2]): c})
    return kernel.normalize(raw)


def _check_letter(ctx: Context, k: int) -> None:
    if not 0 <= k < ctx.n:
        raise BraidIndexError(f"a{k} does not act on {ctx}")


def phi_generator(letter: tuple[int, int], ctx: Context, t: tuple[int, int, int]) -> NCPoly:
    k, sign = letter
    _check_letter(ctx, k)
    ctx.check(t)
    return NCPoly(ctx, dict(letter_image(k, sign, tuple(t))))


@lru_cache(maxsize=1 << 12)
def _word_image(letters: tuple, t: tuple[int, int, int]) -> dict:
    # Phi_{l1..lm} = Phi_{l1..l(m-1)} o Phi_{lm}
    if not letters:
        return kernel.normalize({((t,), 0, 0, 0): 1})
    k, s = letters[-1]
    first = letter_image(k, s, t)
    head = letters[:-1]
    if not head:
        return first
    return kernel.substitute(first, lambda u: _word_image(head, u))


def word_image(beta: BraidWord, ctx: Context, t: tuple[int, int, int]) -> NCPoly:
    """Phi_beta(a_t) in the given algebra."""
    _check_ctx(beta, ctx)
    ctx.check(t)
    return NCPoly(ctx, dict(_word_image(beta.letters, tuple(t))))


def _check_ctx(beta: BraidWord, ctx: Context) -> None:
    if beta.strands != ctx.n:
        raise BraidIndexError(f"braid on {beta.strands} strands cannot act on {ctx}")


def phi_word(beta: BraidWord, p: NCPoly, variant: str | None = None) -> NCPoly:
    ctx = p.ctx
    if variant is not None and variant != ctx.variant:
        ctx = Context(ctx.n, variant)
        p = p.with_ctx(ctx)
    _check_ctx(beta, ctx)
    if not beta.letters:
        return p
    letters = beta.letters
    return p.substitute(lambda u: _word_image(letters, u))


def phi_map(beta: BraidWord):
    """image function usable with NCPoly.substitute."""
    letters = beta.letters
    return lambda u: _word_image(letters, u)


def clear_caches() -> None:
    letter_image.cache_clear()
    _word_image.cache_clear()


# -- sentinel matrices ---------------------------------------------------

@dataclass
class LambdaMatrix:
    f: int
    p: int = 1
    q: int = 1

    def left(self, i: int) -> LaurentScalar:
        return LaurentScalar.mono(l=int(i == self.p), m=-self.f * int(i == self.q))

    def right_inverse(self, j: int) -> LaurentScalar:
        return LaurentScalar.mono(l=-int(j == self.p), m=self.f * int(j == self.q))


def lambda_apply(lam: LambdaMatrix, side: str, index: int) -> LaurentScalar:
    if side == "left":
        return lam.left(index)
    if side == "right-inverse":
        return lam.right_inverse(index)
    raise ValueError(f"unknown side {side!r}")


Entries = dict[tuple[int, int], NCPoly]


@dataclass
class SentinelMatrix:
    """Phi^{+-L} (side left) or Phi^{+-R} (side right) of a braid.

    Left matrices are read by rows (i, x), right matrices by columns
    (j, y); each read is a finite map (k, z) -> core polynomial.
    """

    beta: BraidWord
    variant: str
    side: str
    _cache: dict = field(default_factory=dict, repr=False)
    _lock: Lock = field(default_factory=Lock, repr=False)

    @property
    def n(self) -> int:
        return self.beta.strands

    def line(self, i: int, x: int) -> Entries:
        key = (i, x)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        val = self._compute(i, x)
        with self._lock:
            self._cache.setdefault(key, val)
        return val

    def entry(self, i: int, k: int, x: int, z: int) -> NCPoly:
        """(i,k) entry at (x,z), following the paper's index order."""
        core = Context(self.n, "core")
        if self.side == "left":
            return self.line(i, x).get((k, z), NCPoly.zero(core))
        return self.line(k, z).get((i, x), NCPoly.zero(core))

    def _compute(self, i: int, x: int) -> Entries:
        n = self.n
        ctx = Context(n, self.variant)
        s = ctx.sentinel
        gen = (i, s, x) if self.side == "left" else (s, i, x)
        img = _word_image(self.beta.letters, gen)
        acc: dict[tuple[int, int], dict] = {}
        for (w, l, m, g), c in img.items():
            if self.side == "left":
                if not w or w[-1][1] != s or not 1 <= w[-1][0] <= n:
                    raise MalformedImage(f"term without trailing sentinel in image of {gen}")
                rest, (k, _, z) = w[:-1], w[-1]
            else:
                if not w or w[0][0] != s or not 1 <= w[0][1] <= n:
                    raise MalformedImage(f"term without leading sentinel in image of {gen}")
                rest, (_, k, z) = w[1:], w[0]
            for t in rest:
                if not (1 <= t[0] <= n and 1 <= t[1] <= n):
                    raise MalformedImage(f"stray sentinel in image of {gen}")
            kernel.iadd(acc.setdefault((k, z), {}), {(rest, l, m, g): c})
        core = Context(n, "core")
        return {kz: NCPoly(core, d) for kz, d in sorted(acc.items()) if d}


_MATRIX_CACHE: dict = {}


def extract_matrices(beta: BraidWord, variant: str) -> tuple[SentinelMatrix, SentinelMatrix]:
    if variant not in ("plus", "minus"):
        raise ValueError("sentinel matrices exist for the plus and minus variants")
    key = (beta, variant)
    hit = _MATRIX_CACHE.get(key)
    if hit is None:
        hit = (SentinelMatrix(beta, variant, "left"), SentinelMatrix(beta, variant, "right"))
        if len(_MATRIX_CACHE) > 4096:
            _MATRIX_CACHE.clear()
        _MATRIX_CACHE[key] = hit
    return hit


def big_a(n: int, i: int, j: int, x: int, y: int) -> NCPoly:
    """Entry A_ij^{xy} = a_ij^{x+y}."""
    return NCPoly.gen(Context(n, "core"), i, j, x + y)


def left_times_a(L: SentinelMatrix, i: int, j: int, x: int, y: int) -> NCPoly:
    """(L A)_ij^{xy} = sum_{k,z} L_ik^{xz} a_kj^{z+y}."""
    core = Context(L.n, "core")
    acc: dict = {}
    for (k, z), e in L.line(i, x).items():
        kernel.iadd(acc, kernel.mul(e.flat, NCPoly.gen(core, k, j, z + y).flat))
    return NCPoly(core, acc)


def a_times_right(R: SentinelMatrix, i: int, j: int, x: int, y: int) -> NCPoly:
    """(A R)_ij^{xy} = sum_{k,z} a_ik^{x+z} R_kj^{zy}."""
    core = Context(R.n, "core")
    acc: dict = {}
    for (k, z), e in R.line(j, y).items():
        kernel.iadd(acc, kernel.mul(NCPoly.gen(core, i, k, x + z).flat, e.flat))
    return NCPoly(core, acc)


def left_a_right(L: SentinelMatrix, R: SentinelMatrix, i: int, j: int, x: int, y: int) -> NCPoly:
    """(L A R)_ij^{xy}."""
    core = Context(L.n, "core")
    acc: dict = {}
    rcol = R.line(j, y)
    for (k, z), le in L.line(i, x).items():
        for (l, w), re in rcol.items():
            mid = NCPoly.gen(core, k, l, z + w).flat
            kernel.iadd(acc, kernel.mul(kernel.mul(le.flat, mid), re.flat))
    return NCPoly(core, acc)
