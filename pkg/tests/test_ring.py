import json

import pytest
from hypothesis import given, strategies as st

from cordal.errors import NonUnit
from cordal.ring import (
    GAMMA,
    LAMBDA,
    LOOP,
    MU,
    ONE,
    ZERO,
    LaurentScalar,
    Specialization,
    scalar_arith,
    specialize,
    unit_triples,
)

exps = st.tuples(*(st.integers(-3, 3),) * 3)
scalars = st.lists(st.tuples(exps, st.integers(-5, 5)), max_size=5).map(LaurentScalar)
points = st.sampled_from([(d,) + t for d in (2, 3, 4, 5, 7, 8, 9) for t in unit_triples(d)])


@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(scalars)
def test_no_zero_coefficients(a):
    assert all(c != 0 for c in a.terms.values())


@given(scalars, scalars, points)
def test_specialize_is_a_homomorphism(a, b, pt):
    sp = Specialization(*pt)
    d = pt[0]
    assert sp.value(a * b) == sp.value(a) * sp.value(b) % d
    assert sp.value(a + b) == (sp.value(a) + sp.value(b)) % d
    assert sp.value(-a) == -sp.value(a) % d


@given(scalars, st.randoms())
def test_insertion_order_irrelevant(a, rnd):
    items = list(a.items())
    rnd.shuffle(items)
    assert LaurentScalar(items) == a
    assert hash(LaurentScalar(items)) == hash(a)


@given(scalars)
def test_json_round_trip(a):
    text = json.dumps(a.to_json())
    assert LaurentScalar.from_json(json.loads(text)) == a


def test_examples():
    assert LAMBDA * LAMBDA.inverse() == ONE
    assert LOOP == (ONE + MU) * GAMMA == GAMMA + MU * GAMMA
    assert scalar_arith(MU ** -1, -MU, "mul") == -1
    assert scalar_arith(LAMBDA, LAMBDA, "add") == LaurentScalar.mono(l=1, c=2)
    assert scalar_arith(LAMBDA, None, "neg") == -LAMBDA
    assert int(specialize(LOOP, 5, 1, 1, 2)) == 4
    assert int(specialize(LAMBDA * MU ** -1, 3, 1, 2, 1)) == 2
    assert int(specialize(GAMMA ** 2, 3, 1, 1, 2)) == 1


def test_cancellation_gives_canonical_zero():
    assert (MU - MU).is_zero()
    assert (MU - MU).terms == {}
    assert str(ZERO) == "0"


def test_str():
    assert str(LaurentScalar({(1, -2, 0): 3, (0, 0, 0): -1})) == "-1 + 3*l*m^-2"
    assert str(-(GAMMA * MU)) == "-m*g"


def test_non_units_rejected():
    with pytest.raises(NonUnit):
        specialize(ONE, 4, 2, 1, 1)
    with pytest.raises(NonUnit):
        Specialization(6, 1, 3, 1)
    with pytest.raises(NonUnit):
        Specialization(1, 1, 1, 1)
    with pytest.raises(ValueError):
        (ONE + MU).inverse()


def test_unit_triples():
    assert unit_triples(2) == [(1, 1, 1)]
    assert len(unit_triples(5)) == 64
