import random

import pytest
from hypothesis import given, strategies as st

from cordal.braid import (
    BraidWord,
    conjugate,
    cycles,
    embed,
    free_reduce,
    invert,
    is_knot,
    markov_stabilize,
    parse_braid,
    permutation,
    random_word,
    reflect,
    torus_braid,
    word,
    word_ops,
)
from cordal.errors import BraidIndexError, BraidSyntaxError, StrandMismatch


def test_parse():
    assert parse_braid("a0 a1", 2).letters == ((0, 1), (1, 1))
    assert parse_braid("a1^-1", 2).letters == ((1, -1),)
    assert parse_braid("", 3) == BraidWord(3)
    assert parse_braid("a2 a0").strands == 3
    assert str(parse_braid("a0 a1^-1")) == "a0 a1^-1"
    with pytest.raises(BraidIndexError):
        parse_braid("a3", 2)
    with pytest.raises(BraidSyntaxError):
        parse_braid("b1", 2)
    with pytest.raises(BraidSyntaxError):
        parse_braid("a1^2", 2)


def test_embed():
    assert embed(word(2, 1, 0), "plus") == word(3, 2, 1, 0, 1)
    assert embed(word(2, 0, 1), "minus") == word(3, 0, 1)
    assert embed(BraidWord(2), "plus") == BraidWord(3)
    assert embed(word(1, ~0), "plus") == word(2, ~1, ~0, ~1)


def test_reflect():
    assert reflect(word(2, 0)) == word(2, ~1, ~0, ~1)
    assert reflect(word(3, 1)) == word(3, 2)
    assert free_reduce(reflect(embed(word(1, 0), "plus"))) == word(2, ~0)
    assert embed(reflect(word(1, 0)), "minus") == word(2, ~0)


def test_word_ops():
    assert invert(word(2, 0, 1)) == word(2, ~1, ~0)
    assert conjugate(word(2, 0), word(2, 1)) == word(2, ~1, 0, 1)
    assert free_reduce(word(2, 0, ~0, 1)) == word(2, 1)
    assert word_ops(word(2, 0, 1), "invert") == word(2, ~1, ~0)
    with pytest.raises(StrandMismatch):
        conjugate(word(2, 0), word(3, 1))
    with pytest.raises(StrandMismatch):
        word(2, 0) * word(3, 0)


def test_torus_braid():
    assert torus_braid(1, 2) == word(1, 0, 0)
    assert torus_braid(3, 2) == word(3, 0, 1, 2, 0, 1, 2)
    assert torus_braid(2, 0) == BraidWord(2)


def test_permutation():
    assert permutation(word(1, 0)) == (1,)
    assert permutation(word(2, 1)) == (2, 1)
    assert permutation(word(3, 0)) == (1, 2, 3)
    # beta(i) is the row index that leads Phi_beta(a_i.), the last letter acting first
    assert permutation(torus_braid(3, 2)) == (3, 1, 2)
    assert cycles((3, 1, 2)) == [(1, 3, 2)]
    assert is_knot(torus_braid(3, 2))
    assert not is_knot(BraidWord(2))
    assert not is_knot(torus_braid(2, 2))


def test_markov_stabilize():
    assert markov_stabilize(word(1, 0), "minus", 1) == word(2, 0, 1)
    assert markov_stabilize(word(1, 0), "plus", -1) == word(2, 1, 0, 1, ~1)


def test_errors():
    with pytest.raises(BraidIndexError):
        BraidWord(0)
    with pytest.raises(BraidIndexError):
        word(2, 2)
    with pytest.raises(BraidSyntaxError):
        BraidWord(2, ((0, 2),))


braids = st.builds(lambda seed, n, k: random_word(random.Random(seed), n, k),
                   st.integers(0, 10**6), st.integers(1, 4), st.integers(0, 8))


@given(braids)
def test_involutions(b):
    assert free_reduce(reflect(reflect(b))) == free_reduce(b)
    assert free_reduce(reflect(embed(b, "plus"))) == free_reduce(embed(reflect(b), "minus"))
    assert invert(invert(b)) == b
    assert free_reduce(b * invert(b)) == BraidWord(b.strands)
    assert free_reduce(free_reduce(b)) == free_reduce(b)


@given(st.integers(0, 10**6), st.integers(1, 4))
def test_homomorphisms(seed, n):
    rng = random.Random(seed)
    a, b = random_word(rng, n, rng.randint(0, 6)), random_word(rng, n, rng.randint(0, 6))
    assert reflect(a * b) == reflect(a) * reflect(b)
    assert embed(a * b, "plus") == embed(a, "plus") * embed(b, "plus")
    pa, pb = permutation(a), permutation(b)
    assert permutation(a * b) == tuple(pa[v - 1] for v in pb)


def test_random_word_caps_alpha0():
    rng = random.Random(3)
    for _ in range(50):
        b = random_word(rng, 3, 10, max_alpha0=1)
        assert sum(k == 0 for k, _ in b.letters) <= 1
    assert not random_word(rng, 3, 10, alpha0=False).uses_alpha0()
