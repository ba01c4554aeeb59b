import pytest

from cordal import checks
from cordal.augment import (
    AugQuery,
    compile_relations,
    constant_augmentation_check,
    count_augmentations,
    evaluate,
)
from cordal.errors import NonUnit, SearchTooLarge
from cordal.ring import Specialization, unit_triples
from cordal.torus import finite_presentation


@pytest.mark.parametrize("q,d,lam,mu,gamma,want", [
    (4, 3, 1, 1, 2, 4),
    (5, 5, 1, 1, 3, 3),
    (6, 3, 1, 1, 2, 4),
])
def test_golden(q, d, lam, mu, gamma, want):
    assert count_augmentations(AugQuery(finite_presentation(1, q, 0), d, lam, mu, gamma)) == want


def test_one_one_rule():
    pres = finite_presentation(1, 1, 0)
    for d in (2, 3, 4, 5, 8):
        for lam, mu, gamma in unit_triples(d):
            want = 1 if (mu * mu - 1) % d == 0 else 0
            assert count_augmentations(AugQuery(pres, d, lam, mu, gamma)) == want


def test_constant_augmentation_examples():
    assert constant_augmentation_check(finite_presentation(1, 4, 0), 3, 2)
    assert constant_augmentation_check(finite_presentation(1, 2, 0), 5, 3)
    assert constant_augmentation_check(finite_presentation(1, 1, 0), 4, 3)


def test_evaluate_constant_point():
    pres = finite_presentation(1, 3, 0)
    sp = Specialization(5, 1, 1, 3)
    assert evaluate(pres, sp, {1: 1, 2: 1}) == [0] * len(pres.relations)


def test_search_cap():
    pres = finite_presentation(1, 4, 0)
    with pytest.raises(SearchTooLarge):
        count_augmentations(AugQuery(pres, 50, 1, 1, 1), cap=1000)


def test_non_unit_parameters():
    with pytest.raises(NonUnit):
        count_augmentations(AugQuery(finite_presentation(1, 2, 0), 4, 2, 1, 1))


def test_jobs_and_partitioning():
    pres = finite_presentation(1, 4, 0)
    for d, lam, mu, gamma in ((3, 1, 1, 2), (5, 2, 3, 4), (7, 1, 6, 3)):
        q = AugQuery(pres, d, lam, mu, gamma)
        assert count_augmentations(q, jobs=1) == count_augmentations(q, jobs=3)
    assert checks.partition_independence(4) is None


def test_compiled_form():
    comp = compile_relations(finite_presentation(1, 2, 0), Specialization(5, 1, 1, 1))
    for terms in comp:
        for c, ex in terms:
            assert 0 < c < 5 and len(ex) == 1


def test_markov_and_symmetry_small():
    assert checks.markov_stabilization(2, 5) is None
    assert checks.torus_32_vs_12(5) is None
    assert checks.inverse_symmetry(5) is None
