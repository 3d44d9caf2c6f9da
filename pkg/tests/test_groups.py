import random

import pytest

from graphtower import TowerGroupSpec
from graphtower.errors import BoundExceededError


def test_word_evaluate_abelian():
    spec = TowerGroupSpec("abelian", 3, rank=1)
    assert spec.word_evaluate(2, [(0, 4), (0, 7)]).data == (2,)
    assert spec.word_evaluate(2, [(0, -1)]).data == (8,)


def test_word_evaluate_metacyclic_relation():
    # τ·σ = σ^u·τ with u = 4 at p = 3, n = 2
    spec = TowerGroupSpec("metacyclic", 3, action_unit=4)
    result = spec.word_evaluate(2, [(1, 1), (0, 1)])
    assert result.data == (4, 1)


def test_enumerate_sizes():
    assert len(TowerGroupSpec("abelian", 3, rank=2).enumerate_group(1)) == 9
    assert len(TowerGroupSpec("abelian", 2, rank=1).enumerate_group(1)) == 2
    assert len(TowerGroupSpec("metacyclic", 3).enumerate_group(1)) == 9


def test_enumerate_bound():
    spec = TowerGroupSpec("abelian", 3, rank=2)
    with pytest.raises(BoundExceededError):
        spec.enumerate_group(4)


def test_project():
    spec = TowerGroupSpec("abelian", 3, rank=1)
    g = spec.word_evaluate(2, [(0, 5)])
    assert spec.project(g, 1).data == (2,)
    meta = TowerGroupSpec("metacyclic", 3, action_unit=4)
    h = meta.word_evaluate(2, [(0, 4), (1, 7)])
    assert meta.project(h, 1).data == (1, 1)
    with pytest.raises(ValueError):
        spec.project(g, 3)


def test_projection_is_homomorphism():
    rng = random.Random(21)
    for spec in (TowerGroupSpec("abelian", 3, rank=2),
                 TowerGroupSpec("metacyclic", 3),
                 TowerGroupSpec("metacyclic", 2, action_unit=3)):
        elements = spec.enumerate_group(2)
        for _ in range(50):
            a, b = rng.choice(elements), rng.choice(elements)
            assert (spec.project(spec.multiply(a, b), 1) ==
                    spec.multiply(spec.project(a, 1), spec.project(b, 1)))


def test_group_axioms_random():
    rng = random.Random(22)
    for spec in (TowerGroupSpec("abelian", 2, rank=3),
                 TowerGroupSpec("metacyclic", 3),
                 TowerGroupSpec("metacyclic", 5, action_unit=6)):
        elements = spec.enumerate_group(1 if spec.p == 5 else 2)
        e = spec.identity(elements[0].level)
        for _ in range(40):
            a, b, c = (rng.choice(elements) for _ in range(3))
            assert (spec.multiply(spec.multiply(a, b), c) ==
                    spec.multiply(a, spec.multiply(b, c)))
            assert spec.multiply(a, e) == a
            assert spec.multiply(a, spec.inverse(a)) == e


def test_filtration_index():
    for spec in (TowerGroupSpec("abelian", 3, rank=2),
                 TowerGroupSpec("metacyclic", 3)):
        for n in range(1, 3):
            assert spec.order(n) // spec.order(n - 1) == spec.p ** spec.dimension


def test_generating_sets():
    spec = TowerGroupSpec("abelian", 3, rank=1)
    assert spec.is_generating_set([spec.generator(0, 1)])
    # σ^p at level 1 projects to the identity
    deep = spec.word_evaluate(2, [(0, 3)])
    assert not spec.is_generating_set([spec.project(deep, 1)])
    meta = TowerGroupSpec("metacyclic", 3)
    assert meta.is_generating_set([meta.generator(0, 1), meta.generator(1, 1)])
    assert not meta.is_generating_set([meta.generator(0, 1)])


def test_invalid_specs():
    with pytest.raises(ValueError):
        TowerGroupSpec("abelian", 4, rank=1)
    with pytest.raises(ValueError):
        TowerGroupSpec("metacyclic", 3, action_unit=2)
    with pytest.raises(ValueError):
        TowerGroupSpec("dihedral", 3)
