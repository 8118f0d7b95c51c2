import itertools
import json
import random

import pytest

from frozen import DESIGNS_7_4, DESIGNS_9_5
from kcovers.errors import ArgumentError, InvalidCoverError, ResourceCapError
from kcovers.oracle import brute_force_hitting_sets, brute_force_intersectors
from kcovers.reliability import (
    CoherentSystem,
    count_coherent_designs,
    is_constructive_cover,
    minimal_cut_sets,
    phi_from_cuts,
    phi_from_paths,
)

TWO_OF_THREE = [{1, 2}, {1, 3}, {2, 3}]


def test_constructive_examples():
    assert is_constructive_cover(TWO_OF_THREE, 3)
    assert is_constructive_cover([{1, 2}, {2, 3}, {1, 3, 4}], 4)
    assert not is_constructive_cover([{1, 2}, {1}], 2)
    assert not is_constructive_cover([{1}, {1}], 1)
    assert not is_constructive_cover([{1}], 2)
    assert not is_constructive_cover([{1, 5}], 2)


def test_phi_examples():
    z = (1, 1, 0)
    assert phi_from_paths(z, TWO_OF_THREE) == 1
    assert phi_from_cuts(z, TWO_OF_THREE) == 1
    z = (2, 0, 1, 2)
    assert phi_from_paths(z, [{1, 2, 3, 4}]) == min(z)
    assert phi_from_paths(z, [{1}, {2}, {3}, {4}]) == max(z)
    assert phi_from_cuts(z, [{1}, {2}, {3}, {4}]) == min(z)
    assert phi_from_cuts(z, [{1, 2, 3, 4}]) == max(z)


def test_phi_dimension():
    with pytest.raises(ArgumentError):
        phi_from_paths((1, 1), TWO_OF_THREE)
    with pytest.raises(ArgumentError):
        phi_from_cuts((1, 1), TWO_OF_THREE)
    with pytest.raises(ArgumentError):
        phi_from_paths((1,), [])


def test_cut_examples():
    assert set(minimal_cut_sets(TWO_OF_THREE, 3)) == set(map(frozenset, TWO_OF_THREE))
    assert minimal_cut_sets([{1, 2, 3, 4}], 4) == [{1}, {2}, {3}, {4}]
    assert minimal_cut_sets([{1}, {2}, {3}], 3) == [{1, 2, 3}]


def test_cut_cap():
    paths = [{2 * i + 1, 2 * i + 2} for i in range(8)]
    assert len(minimal_cut_sets(paths, 16)) == 2**8
    with pytest.raises(ResourceCapError):
        minimal_cut_sets(paths, 16, cap=100)


def random_paths(rng, n, max_paths=5):
    while True:
        k = rng.randint(1, min(n, max_paths))
        sets = [frozenset(p for p in range(1, n + 1) if rng.random() < 0.45) for _ in range(k)]
        if is_constructive_cover(sets, n):
            return sets


def test_duality_and_cut_properties():
    rng = random.Random(2024)
    for _ in range(200):
        n = rng.randint(1, 6)
        s = rng.randint(1, 2)
        paths = random_paths(rng, n)
        cuts = minimal_cut_sets(paths, n)
        assert set(cuts) == brute_force_hitting_sets(paths, n)
        assert set(cuts) == brute_force_intersectors(paths)
        assert is_constructive_cover(cuts, n)
        assert all(c & p for c in cuts for p in paths)
        # applying the construction twice returns the path sets
        assert set(minimal_cut_sets(cuts, n)) == set(paths)
        for z in itertools.product(range(s + 1), repeat=n):
            phi = phi_from_paths(z, paths)
            assert phi == phi_from_cuts(z, cuts)
            for level in range(s + 1):
                below = all(any(z[p - 1] <= level for p in P) for P in paths)
                above = all(any(z[p - 1] > level for p in C) for C in cuts)
                assert (phi <= level) == below
                assert (phi > level) == above


def test_system_json_roundtrip():
    system = CoherentSystem.from_paths(3, 2, TWO_OF_THREE, with_cuts=True)
    doc = json.loads(system.to_json())
    assert doc == {"n": 3, "s": 2, "paths": [[1, 2], [1, 3], [2, 3]],
                   "cuts": [[1, 2], [1, 3], [2, 3]]}
    again = CoherentSystem.from_json(system.to_json())
    assert again == system
    assert again.phi_paths((2, 1, 0)) == again.phi_cuts((2, 1, 0)) == 1


def test_system_validation():
    with pytest.raises(InvalidCoverError):
        CoherentSystem.from_paths(2, 1, [{1, 2}, {1}])
    with pytest.raises(InvalidCoverError):
        CoherentSystem(3, 1, tuple(map(frozenset, TWO_OF_THREE)), (frozenset({1}), frozenset({2, 3})))
    with pytest.raises(ArgumentError):
        CoherentSystem.from_json("[1, 2]")
    with pytest.raises(ArgumentError):
        CoherentSystem.from_json('{"n": 3}')
    with pytest.raises(ArgumentError):
        CoherentSystem.from_json("{nope")
    system = CoherentSystem.from_paths(3, 1, TWO_OF_THREE)
    with pytest.raises(ArgumentError):
        system.phi_paths((1, 2, 0))
    with pytest.raises(ArgumentError):
        system.phi_cuts((1, 1))


def test_design_counts():
    assert count_coherent_designs(7, 4) == DESIGNS_7_4
    assert count_coherent_designs(9, 5) == DESIGNS_9_5
    assert count_coherent_designs(3, 3) == 2
