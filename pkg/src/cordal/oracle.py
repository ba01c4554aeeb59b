"""Independent recomputation of the braid action from the punctured disk.

Punctures sit on a horizontal line at positions 0..N-1, position 0 being
the fixed puncture p. A based curve from q_i to q_j is stored as a word
in the free group on the loops x_0 = e, x_1, ..., one loop per position.
The Artin automorphism of a half twist moves the word; psi then reads it
back as a polynomial in the a_ij^x through tau and alpha_ij.

Layouts per variant:

    core   positions 0..n         index k at position k
    minus  positions 0..n+1       index n+1 at position n+1 (transparent)
    plus   positions 0..n+1       index 0 at position 1 (transparent),
                                  index k at position k+1

A transparent loop e' has tau(e') = 1.

The handedness of the half twist and the connector words that carry the
base paths delta_i along are not fixed by the prose. Every convention in
CANDIDATES is tried by calibrate(); the one that reproduces the action on
single letters is pinned in CONVENTION.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import kernel
from .algebra import Context, NCPoly
from .braid import BraidWord
from .ring import LaurentScalar

FLetter = tuple[int, int]  # (position, +-1)
FWord = tuple[FLetter, ...]


def reduce_word(w) -> FWord:
    out: list[FLetter] = []
    for a in w:
        if out and out[-1] == (a[0], -a[1]):
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def inverse_word(w: FWord) -> FWord:
    return tuple((p, -s) for p, s in reversed(w))


@dataclass(frozen=True)
class CurveWord:
    """Based curve delta_start * gamma * reverse(delta_end); start/end are positions."""

    start: int
    end: int
    word: FWord

    def __post_init__(self):
        object.__setattr__(self, "word", reduce_word(self.word))


# -- layouts --------------------------------------------------------------

@dataclass(frozen=True)
class Layout:
    n: int
    variant: str

    @property
    def size(self) -> int:
        return self.n + 1 if self.variant == "core" else self.n + 2

    @property
    def transparent(self) -> frozenset[int]:
        if self.variant == "plus":
            return frozenset({1})
        if self.variant == "minus":
            return frozenset({self.n + 1})
        return frozenset()

    def position(self, index: int) -> int:
        return index + 1 if self.variant == "plus" else index

    def index(self, pos: int) -> int:
        return pos - 1 if self.variant == "plus" else pos

    def sigmas(self, k: int, sign: int) -> list[tuple[int, int]]:
        """The half twists making up alpha_k^sign, in application order."""
        if self.variant == "plus":
            if k == 0:
                seq = [1, 0, 0, 1]
            else:
                seq = [k + 1]
        else:
            seq = [0, 0] if k == 0 else [k]
        # palindromes, so the inverse is the same list of inverse twists
        return [(s, sign) for s in seq]


# -- half twists ------------------------------------------------------------

@dataclass(frozen=True)
class Convention:
    """variant: one of four Artin automorphisms of a positive half twist.

    conn_left / conn_right: connector words for the puncture leaving
    position k (moving right) and leaving k+1 (moving left), written as
    (offset, sign) letters with offset 0 meaning x_k and 1 meaning x_{k+1}
    in the positions after the twist.
    """

    variant: int
    conn_left: tuple[tuple[int, int], ...]
    conn_right: tuple[tuple[int, int], ...]


def _artin(variant: int, k: int) -> dict[int, FWord]:
    a, b = k, k + 1
    if variant == 0:
        return {a: ((a, 1), (b, 1), (a, -1)), b: ((a, 1),)}
    if variant == 1:
        return {a: ((b, 1),), b: ((b, -1), (a, 1), (b, 1))}
    if variant == 2:
        return {a: ((b, 1),), b: ((b, 1), (a, 1), (b, -1))}
    if variant == 3:
        return {a: ((a, -1), (b, 1), (a, 1)), b: ((a, 1),)}
    raise ValueError(f"unknown Artin variant {variant}")


def _apply_auto(auto: dict[int, FWord], w: FWord) -> FWord:
    out: list[FLetter] = []
    for p, s in w:
        img = auto.get(p, ((p, 1),))
        out.extend(img if s == 1 else inverse_word(img))
    return reduce_word(out)


def _invert_auto(variant: int, k: int) -> dict[int, FWord]:
    # each variant's inverse is another variant of the list
    return _artin({0: 1, 1: 0, 2: 3, 3: 2}[variant], k)


def _half_twist(conv: Convention, k: int, sign: int, c: CurveWord) -> CurveWord:
    a, b = k, k + 1

    def conn(spec) -> FWord:
        return tuple((k + off, s) for off, s in spec)

    def move(pos: int) -> int:
        return b if pos == a else a if pos == b else pos

    if sign == 1:
        auto = _artin(conv.variant, k)
        cs = {a: conn(conv.conn_left), b: conn(conv.conn_right)}
        w = _apply_auto(auto, c.word)
        left = inverse_word(cs.get(c.start, ()))
        right = cs.get(c.end, ())
        return CurveWord(move(c.start), move(c.end), left + w + right)
    inv = _invert_auto(conv.variant, k)
    # undo c_i^-1 rho(w) c_j: w = rho^-1(c_i) rho^-1(w') rho^-1(c_j)^-1
    cs = {a: conn(conv.conn_left), b: conn(conv.conn_right)}
    i, j = move(c.start), move(c.end)
    left = _apply_auto(inv, cs.get(i, ()))
    right = inverse_word(_apply_auto(inv, cs.get(j, ())))
    return CurveWord(i, j, left + _apply_auto(inv, c.word) + right)


_CONNECTORS = ((), ((0, 1),), ((0, -1),), ((1, 1),), ((1, -1),))
CANDIDATES = tuple(
    Convention(v, cl, cr) for v in range(4) for cl in _CONNECTORS for cr in _CONNECTORS
)
# pinned by calibrate(); see tests/test_oracle.py
CONVENTION = Convention(0, ((0, 1),), ())


# -- tau and psi ------------------------------------------------------------

def psi(c: CurveWord, layout: Layout) -> NCPoly:
    """alpha_ij(tau(word)) as a normalized polynomial.

    Runs a state machine over the word instead of expanding tau: a state
    is (open row r, pending e-exponent m) and carries the polynomial of
    the generators already closed off.
    """
    ctx = Context(layout.n, layout.variant)
    skip = layout.transparent
    one = {((), 0, 0, 0): 1}
    states: dict[tuple[int, int], dict] = {(layout.index(c.start), 0): one}
    for pos, s in c.word:
        if pos == 0:
            states = {(r, m + s): P for (r, m), P in states.items()}
            continue
        if pos in skip:
            continue
        k = layout.index(pos)
        # tau(e_k) = y_k/g - 1, tau(e_k^-1) = y_k/(g m) - 1
        em = 0 if s == 1 else -1
        nxt: dict[tuple[int, int], dict] = {}
        for (r, m), P in states.items():
            acc = nxt.setdefault((r, m), {})
            kernel.iadd(acc, P, -1)
            closed = kernel.normalize(kernel.mul(P, {(((r, k, m),), 0, em, -1): 1}))
            acc = nxt.setdefault((k, 0), {})
            kernel.iadd(acc, closed, 1)
        states = {key: P for key, P in nxt.items() if P}
    out: dict = {}
    j = layout.index(c.end)
    for (r, m), P in states.items():
        kernel.iadd(out, kernel.normalize(kernel.mul(P, {(((r, j, m),), 0, 0, 0): 1})), 1)
    return NCPoly(ctx, out)


def generator_curve(layout: Layout, i: int, j: int, x: int) -> CurveWord:
    """gamma_ij^x: the based word e^x."""
    return CurveWord(layout.position(i), layout.position(j), ((0, 1 if x > 0 else -1),) * abs(x))


def artin_apply(letter: tuple[int, int], c: CurveWord, layout: Layout,
                conv: Convention | None = None) -> CurveWord:
    conv = conv or CONVENTION
    k, sign = letter
    for s, e in layout.sigmas(k, sign):
        c = _half_twist(conv, s, e, c)
    return c


def artin_word(beta: BraidWord, c: CurveWord, layout: Layout,
               conv: Convention | None = None) -> CurveWord:
    # the last letter acts first
    for letter in reversed(beta.letters):
        c = artin_apply(letter, c, layout, conv)
    return c


def oracle_phi(beta: BraidWord, i: int, j: int, x: int, variant: str = "core",
               conv: Convention | None = None) -> NCPoly:
    layout = Layout(beta.strands, variant)
    Context(layout.n, variant).check((i, j, x))
    return psi(artin_word(beta, generator_curve(layout, i, j, x), layout, conv), layout)


def tau_expand(c: CurveWord, layout: Layout) -> dict[tuple, LaurentScalar]:
    """tau(word) in B as {alternating word: coefficient}.

    Keys alternate e-exponents and y-indices: (m_1, k_1, m_2, ..., m_{r+1}).
    y_k^2 never appears because adjacent y's always carry an e-exponent
    between them; a zero exponent between equal y's is collapsed by
    y_k^2 = g(1+m) y_k.
    """
    from .ring import LOOP, ONE

    terms: dict[tuple, LaurentScalar] = {(0,): ONE}
    for pos, s in c.word:
        nxt: dict[tuple, LaurentScalar] = {}

        def put(key, val):
            v = nxt.get(key)
            v = val if v is None else v + val
            if v.is_zero():
                nxt.pop(key, None)
            else:
                nxt[key] = v

        for key, coef in terms.items():
            if pos == 0:
                put(key[:-1] + (key[-1] + s,), coef)
            elif pos in layout.transparent:
                put(key, coef)
            else:
                k = layout.index(pos)
                put(key, -coef)
                a = LaurentScalar.mono(g=-1) if s == 1 else LaurentScalar.mono(m=-1, g=-1)
                if key[-1] == 0 and len(key) > 1 and key[-2] == k:
                    put(key, coef * a * LOOP)
                else:
                    put(key + (k, 0), coef * a)
        terms = nxt
    return terms


# -- calibration ------------------------------------------------------------

def _letters(n: int):
    for k in range(n):
        for s in (1, -1):
            yield (k, s)


def _generators(ctx: Context, X: int):
    for i in ctx.indices:
        for j in ctx.indices:
            for x in range(-X, X + 1):
                if i == j and x == 0:
                    continue
                yield (i, j, x)


def convention_matches(conv: Convention, max_n: int = 3, X: int = 2,
                       variants=("core", "minus", "plus")) -> bool:
    from .action import phi_generator

    for n in range(1, max_n + 1):
        for variant in variants:
            layout = Layout(n, variant)
            ctx = Context(n, variant)
            for letter in _letters(n):
                for t in _generators(ctx, X):
                    got = psi(artin_apply(letter, generator_curve(layout, *t), layout, conv), layout)
                    if got != phi_generator(letter, ctx, t):
                        return False
    return True


def calibrate(max_n: int = 3, X: int = 2) -> list[Convention]:
    """Every candidate convention that reproduces the single-letter action."""
    # cheap screen on n = 1, 2 first
    first = [c for c in CANDIDATES if convention_matches(c, 2, 1)]
    return [c for c in first if convention_matches(c, max_n, X)]


@lru_cache(maxsize=None)
def pinned_ok() -> bool:
    return convention_matches(CONVENTION)


@dataclass
class Mismatch:
    variant: str
    i: int
    j: int
    x: int
    oracle: NCPoly
    action: NCPoly

    def to_json(self) -> dict:
        return {"variant": self.variant, "i": self.i, "j": self.j, "x": self.x,
                "oracle": self.oracle.to_json(), "action": self.action.to_json()}


def oracle_diff(beta: BraidWord, window: int, variants=("core", "minus", "plus")) -> list[Mismatch]:
    """Compare oracle_phi against the action on every generator in the window."""
    from .action import word_image

    out = []
    for variant in variants:
        ctx = Context(beta.strands, variant)
        for t in _generators(ctx, window):
            a = oracle_phi(beta, *t, variant=variant)
            b = word_image(beta, ctx, t)
            if a != b:
                out.append(Mismatch(variant, *t, a, b))
    return out


__all__ = [
    "CANDIDATES", "CONVENTION", "Convention", "CurveWord", "Layout", "Mismatch",
    "artin_apply", "artin_word", "calibrate", "convention_matches", "generator_curve",
    "inverse_word", "oracle_diff", "oracle_phi", "psi", "reduce_word", "tau_expand",
]

