"""Words in the type-B Artin group C_n.

Letters are (k, sign) with 0 <= k < n. alpha_0 winds strand 1 around
the puncture; alpha_k (k >= 1) crosses strands k and k+1.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .errors import BraidIndexError, BraidSyntaxError, StrandMismatch

Letter = tuple[int, int]

_TOKEN = re.compile(r"a(\d+)(\^-1)?\Z")


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidIndexError("a braid needs at least one strand")
        letters = tuple((int(k), int(s)) for k, s in self.letters)
        for k, s in letters:
            if s not in (1, -1):
                raise BraidSyntaxError(f"bad sign {s} on a{k}")
            if not 0 <= k < self.strands:
                raise BraidIndexError(f"a{k} needs more than {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        _same(self, other)
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        if k < 0:
            return invert(self) ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def __str__(self):
        return " ".join(f"a{k}" if s == 1 else f"a{k}^-1" for k, s in self.letters)

    def uses_alpha0(self) -> bool:
        return any(k == 0 for k, _ in self.letters)


def _same(a: BraidWord, b: BraidWord) -> None:
    if a.strands != b.strands:
        raise StrandMismatch(f"{a.strands} strands vs {b.strands}")


def word(strands: int, *letters: int) -> BraidWord:
    """Shorthand: word(2, 0, 1, ~1) is a0 a1 a1^-1 (~k stands for a_k^-1)."""
    out = []
    for v in letters:
        out.append((v, 1) if v >= 0 else (~v, -1))
    return BraidWord(strands, tuple(out))


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    letters = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise BraidSyntaxError(f"bad token {tok!r}")
        letters.append((int(m.group(1)), -1 if m.group(2) else 1))
    if strands is None:
        strands = max((k for k, _ in letters), default=0) + 1
    for k, _ in letters:
        if k >= strands:
            raise BraidIndexError(f"a{k} needs more than {strands} strands")
    return BraidWord(strands, tuple(letters))


def embed(b: BraidWord, side: str) -> BraidWord:
    if side == "minus":
        return BraidWord(b.strands + 1, b.letters)
    if side != "plus":
        raise ValueError(f"unknown side {side!r}")
    out: list[Letter] = []
    for k, s in b.letters:
        if k == 0:
            # a1 a0 a1 is a palindrome, so its inverse is a1^-1 a0^-1 a1^-1
            out += [(1, s), (0, s), (1, s)]
        else:
            out.append((k + 1, s))
    return BraidWord(b.strands + 1, tuple(out))


def reflect(b: BraidWord) -> BraidWord:
    n = b.strands
    out: list[Letter] = []
    for k, s in b.letters:
        if k == 0:
            # r(a0) = (a_{n-1} ... a1 a0 a1 ... a_{n-1})^-1, a palindrome
            pal = list(range(n - 1, 0, -1)) + [0] + list(range(1, n))
            out += [(j, -s) for j in pal]
        else:
            out.append((n - k, s))
    return BraidWord(n, tuple(out))


def invert(b: BraidWord) -> BraidWord:
    return BraidWord(b.strands, tuple((k, -s) for k, s in reversed(b.letters)))


def conjugate(b: BraidWord, a: BraidWord) -> BraidWord:
    """a^-1 b a."""
    _same(b, a)
    return invert(a) * b * a


def free_reduce(b: BraidWord) -> BraidWord:
    stack: list[Letter] = []
    for k, s in b.letters:
        if stack and stack[-1] == (k, -s):
            stack.pop()
        else:
            stack.append((k, s))
    return BraidWord(b.strands, tuple(stack))


def word_ops(b: BraidWord, op: str, other: BraidWord | None = None) -> BraidWord:
    if op == "invert":
        return invert(b)
    if op == "conjugate":
        return conjugate(b, other)
    if op == "free_reduce":
        return free_reduce(b)
    raise ValueError(f"unknown op {op!r}")


def torus_braid(p: int, q: int) -> BraidWord:
    if p < 1 or q < 0:
        raise BraidIndexError(f"torus_braid needs p >= 1, q >= 0 (got {p}, {q})")
    return BraidWord(p, tuple((k, 1) for k in range(p)) * q)


# -- permutations ------------------------------------------------------

def permutation(b: BraidWord) -> tuple[int, ...]:
    """perm[i-1] = beta(i), the end position of the strand starting at i.

    Uses the composition order of the action: beta(i) is the row index
    that leads every monomial of Phi_beta(a_{i,.}), so the last letter
    acts first.
    """
    perm = list(range(1, b.strands + 1))
    for k, _ in reversed(b.letters):
        if k == 0:
            continue
        perm = [k + 1 if v == k else k if v == k + 1 else v for v in perm]
    return tuple(perm)


def cycles(perm: tuple[int, ...]) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        cyc = []
        v = start
        while v not in seen:
            seen.add(v)
            cyc.append(v)
            v = perm[v - 1]
        out.append(tuple(cyc))
    return out


def is_knot(b: BraidWord) -> bool:
    return len(cycles(permutation(b))) == 1


# -- Markov moves ------------------------------------------------------

def markov_conjugate(b: BraidWord, a: BraidWord) -> BraidWord:
    return conjugate(b, a)


def markov_stabilize(b: BraidWord, side: str, sign: int) -> BraidWord:
    """side minus: e-(b) a_n^sign; side plus: e+(b) a_1^sign.

    Framing bookkeeping: the result with sign s carries framing f - s.
    """
    e = embed(b, side)
    k = b.strands if side == "minus" else 1
    return BraidWord(e.strands, e.letters + ((k, sign),))


def random_word(rng: random.Random, strands: int, length: int, alpha0: bool = True,
                max_alpha0: int | None = None) -> BraidWord:
    """Uniform letters; max_alpha0 caps how many a0^{+-1} letters appear.

    Images grow roughly sevenfold per extra a0, so random tests cap it.
    """
    lo = 0 if alpha0 else 1
    if lo >= strands:
        return BraidWord(strands)
    out = []
    zeros = 0
    for _ in range(length):
        k = rng.randrange(lo, strands)
        if k == 0 and max_alpha0 is not None and zeros >= max_alpha0:
            k = rng.randrange(1, strands) if strands > 1 else None
        if k is None:
            continue
        zeros += k == 0
        out.append((k, rng.choice((1, -1))))
    return BraidWord(strands, tuple(out))
