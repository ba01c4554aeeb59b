import json
from math import gcd

import pytest
from hypothesis import given, strategies as st

from cordal import checks
from cordal.augment import AugQuery, count_augmentations
from cordal.braid import BraidWord, invert, torus_braid, word
from cordal.errors import NoSolution, NotKnot, NotMonomial
from cordal.ring import LAMBDA as L, MU as M, ONE, LaurentScalar, unit_triples
from cordal.torus import (
    Presentation,
    braid_presentation,
    detect_closure,
    finite_presentation,
    g_h,
    rewrite_to_core,
)

coprime = st.tuples(st.integers(1, 6), st.integers(1, 8)).filter(lambda pq: gcd(*pq) == 1)


@given(coprime, st.integers(0, 5), st.integers(0, 20))
def test_g_h_period(pq, i, k):
    p, q = pq
    i %= p
    assert g_h(i, p, p, q) == (q, 1)
    assert g_h(i, k, p, q)[0] == (k // p) * q + g_h(i, k % p, p, q)[0]
    assert g_h(i, 0, p, q) == (0, 0)


@given(coprime, st.integers(-3, 3), st.integers(-8, 8), st.integers(0, 5), st.integers(0, 5))
def test_rewrite_lands_in_period(pq, f, x, i, j):
    p, q = pq
    s, x2 = rewrite_to_core(i % p, j % p, x, p, q, f)
    assert 0 <= x2 < q
    assert s.is_unit()


def test_rewrite_examples():
    # one period: b00^q = m^q c b00^0 with c = l m^-f
    assert rewrite_to_core(0, 0, 2, 1, 2, 0) == (M ** 2 * L, 0)
    assert rewrite_to_core(0, 0, 3, 1, 3, 2) == (M * L, 0)
    assert rewrite_to_core(0, 0, 1, 1, 2, 0) == (ONE, 1)
    assert rewrite_to_core(0, 0, -1, 1, 2, 0) == (L ** -1 * M ** -2, 1)
    with pytest.raises(NoSolution):
        rewrite_to_core(0, 0, 1, 2, 4, 0)


def test_rewrite_consistency():
    # b_ij^x read through a second solution k + p of k q = i (mod p)
    assert checks.rewriters_agree(4) is None


def test_closure_closed_form():
    assert checks.closure_closed_form(4, 5) is None
    cd = detect_closure(torus_braid(3, 1))
    assert {i: (s.target, s.unit, s.shift) for i, s in cd.rows.items()} == \
        {1: (2, ONE, 0), 2: (3, ONE, 0), 3: (1, M, 1)}
    cd = detect_closure(torus_braid(1, 4))
    assert cd.rows[1].unit == M ** 4 and cd.rows[1].shift == 4


def test_closure_refusals():
    with pytest.raises(NotKnot):
        detect_closure(BraidWord(2))
    with pytest.raises(NotKnot):
        detect_closure(torus_braid(2, 2))
    with pytest.raises(NotMonomial):
        detect_closure(word(2, 1))
    with pytest.raises(NoSolution):
        finite_presentation(2, 4, 0)


def test_one_one_presentation():
    pres = finite_presentation(1, 1, 0)
    assert pres.variables == 0
    assert pres.relations
    for r in pres.relations:
        assert r.words() == [()]
        s = r.coeff(())
        # every relation is a unit times m^2 - 1
        assert any(s * LaurentScalar.mono(*e, c=u) == M ** 2 - 1
                   for e in [(a, b, g) for a in range(-3, 4) for b in range(-4, 4) for g in range(-3, 4)]
                   for u in (1, -1))


def test_one_two_presentation_matches_printed_counts():
    pres = finite_presentation(1, 2, 0)
    assert pres.variables == 1
    for d in (3, 5, 7):
        for lam, mu, gamma in unit_triples(d):
            want = sum(((1 - mu) * X) % d == 0 and (X * X - gamma ** 2 * lam * (1 + mu) ** 2) % d == 0
                       for X in range(d))
            assert count_augmentations(AugQuery(pres, d, lam, mu, gamma)) == want


def test_variable_bound():
    for p, q in checks.TORUS_CASES:
        pres = finite_presentation(p, q, 0)
        assert pres.variables == q - 1
        for r in pres.relations:
            assert all(0 < t[2] < q for w in r.words() for t in w)


def test_braid_presentation_agrees_with_torus():
    for p, q in ((2, 1), (1, 3), (2, 3)):
        a = finite_presentation(p, q, 1)
        b = braid_presentation(torus_braid(p, q), 1)
        assert [str(r) for r in a.relations] == [str(r) for r in b.relations]


def test_inverse_braid_presentation():
    pres = braid_presentation(invert(torus_braid(1, 2)), 0)
    assert pres.variables == 1


def test_round_trip_soundness():
    assert checks.round_trip(2) is None


def test_json_round_trip_and_text():
    pres = finite_presentation(1, 3, 0)
    d = json.loads(json.dumps(pres.to_json()))
    assert d["p"] == 1 and d["q"] == 3 and d["f"] == 0 and d["variables"] == 2
    back = Presentation.from_json(d)
    assert back.relations == pres.relations
    text = pres.to_text()
    assert text.splitlines()[0] == "# torus (1,3)  framing: 0  variables: v1..v2 (v0 = (1+m)*g)"
    assert all(line.endswith(" = 0") for line in text.splitlines()[1:])
