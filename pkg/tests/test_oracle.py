import random

from hypothesis import given, settings, strategies as st

from cordal import checks
from cordal.action import word_image
from cordal.algebra import Context, NCPoly
from cordal.braid import BraidWord, random_word, word
from cordal.oracle import (
    CANDIDATES,
    CONVENTION,
    CurveWord,
    Layout,
    artin_apply,
    artin_word,
    calibrate,
    generator_curve,
    oracle_diff,
    oracle_phi,
    psi,
    reduce_word,
    tau_expand,
)
from cordal.ring import GAMMA as G, LOOP, MU as M, ONE, LaurentScalar

C2 = Context(2)
L2 = Layout(2, "core")


def test_curve_words_are_reduced():
    assert reduce_word(((1, 1), (1, -1), (0, 1))) == ((0, 1),)
    assert CurveWord(1, 2, ((2, 1), (0, 1), (0, -1), (2, -1))).word == ()


def test_tau():
    assert tau_expand(CurveWord(1, 1, ((1, 1), (1, -1))), L2) == {(0,): ONE}
    assert tau_expand(CurveWord(1, 2, ((0, 1),) * 3), L2) == {(3,): ONE}
    assert tau_expand(CurveWord(1, 2, ((2, 1),)), L2) == {(0,): -ONE, (0, 2, 0): G ** -1}
    assert tau_expand(CurveWord(1, 2, ((2, -1),)), L2) == {(0,): -ONE, (0, 2, 0): (G * M) ** -1}
    # e' is transparent
    lm = Layout(1, "minus")
    assert tau_expand(CurveWord(1, 2, ((2, 1), (0, 1))), lm) == {(1,): ONE}


def test_psi_examples():
    assert psi(generator_curve(L2, 1, 2, 3), L2) == NCPoly.gen(C2, 1, 2, 3)
    e2 = CurveWord(1, 2, ((2, 1),))
    want = (NCPoly.gen(C2, 1, 2, 0) * NCPoly.gen(C2, 2, 2, 0)).scale(G ** -1) - NCPoly.gen(C2, 1, 2, 0)
    assert psi(e2, L2) == want
    assert psi(CurveWord(1, 1, ()), L2) == NCPoly.scalar(C2, LOOP)


def test_psi_agrees_with_tau_expansion():
    rng = random.Random(5)
    for _ in range(30):
        w = tuple((rng.randrange(3), rng.choice((1, -1))) for _ in range(rng.randint(0, 5)))
        c = CurveWord(rng.randint(1, 2), rng.randint(1, 2), w)
        i, j = c.start, c.end
        acc = NCPoly.zero(C2)
        for key, coef in tau_expand(c, L2).items():
            # alpha_ij of e^m1 y_k1 e^m2 ... e^m(r+1)
            rows = (i,) + key[1::2] + (j,)
            term = NCPoly.one(C2)
            for r in range(len(key[::2])):
                term = term * NCPoly.gen(C2, rows[r], rows[r + 1], key[2 * r])
            acc = acc + term.scale(coef)
        assert acc == psi(c, L2)


def test_calibration_is_unique():
    assert len(CANDIDATES) == 100
    assert calibrate() == [CONVENTION]


def test_worked_example():
    beta = word(2, 1, 1, 0)
    assert oracle_phi(beta, 1, 2, 0) == word_image(beta, C2, (1, 2, 0))
    assert len(oracle_phi(beta, 1, 2, 0)) == 6


def test_trivial_cases():
    for x in (-2, 1, 3):
        assert oracle_phi(BraidWord(2), 1, 2, x) == NCPoly.gen(C2, 1, 2, x)
        assert oracle_phi(word(1, 0), 1, 1, x) == NCPoly.gen(Context(1), 1, 1, x)
    c = generator_curve(L2, 2, 1, -1)
    assert artin_word(BraidWord(2), c, L2) == c
    assert artin_apply((1, -1), artin_apply((1, 1), c, L2), L2) == c


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_random_words_match_action(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    beta = random_word(rng, n, rng.randint(0, 4), max_alpha0=1)
    if checks.curve_cost(beta) > checks.MAX_CURVE:
        return
    assert oracle_diff(beta, 1) == []


def test_property_checks():
    assert checks.oracle_artin_relations(3, 1) is None
    assert checks.oracle_skein(30) is None
    assert checks.oracle_random(20) is None
