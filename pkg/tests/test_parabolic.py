import itertools

import pytest

from coxfa.catalog import named_system
from coxfa.parabolic import parabolic_inclusion, parabolic_intersection, special_intersection
from coxfa.system import parse_system
from coxfa.words import inverse, reduce
from oracle import CayleyOracle, brute_intersection, conjugated_core_set, subgroup_keys

A2 = parse_system("gens a b\npair a b 3")


def test_special_intersection_examples():
    sys = parse_system("gens a b c\npair a b 3\npair b c 3")
    assert special_intersection(sys, {0, 1}, {1, 2}) == {1}
    assert special_intersection(sys, {0, 1}, {0, 1}) == {0, 1}
    assert special_intersection(sys, {0}, {2}) == frozenset()


def test_identity_word_gives_special_intersection():
    b3 = named_system("B3")
    res = parabolic_intersection(b3, {0, 1}, {1, 2}, ())
    assert res.conjugator_a == () and res.core_generators == {1}


def test_dihedral_example_matches_brute_force():
    oracle = CayleyOracle(A2)
    res = parabolic_intersection(A2, {0}, {1}, (0, 1))
    assert conjugated_core_set(oracle, res) == brute_intersection(oracle, {0}, {1}, (0, 1))
    # (ab) b (ab)^-1 = aba is not a, so the intersection is trivial
    assert res.core_generators == frozenset()
    res = parabolic_intersection(A2, {0}, {1}, (0,))
    assert conjugated_core_set(oracle, res) == brute_intersection(oracle, {0}, {1}, (0,))


def test_a3_longest_element_example():
    a3 = named_system("A3")
    oracle = CayleyOracle(a3)
    w0 = oracle.elements[-1]
    res = parabolic_intersection(a3, {0, 1}, {1, 2}, w0)
    assert res.core_generators <= {0, 1}
    assert conjugated_core_set(oracle, res) == brute_intersection(oracle, {0, 1}, {1, 2}, w0)
    assert res.core_generators == {0, 1}


def test_inclusion_examples():
    a3 = named_system("A3")
    assert parabolic_inclusion(a3, {0}, {0, 1}, ())
    assert not parabolic_inclusion(a3, {0, 1}, {1}, (2,))


def test_inclusion_exhaustive_b3():
    b3 = named_system("B3")
    oracle = CayleyOracle(b3)
    W3 = subgroup_keys(oracle, {2})
    for w in oracle.elements:
        winv = tuple(reversed(w))
        expected = oracle.key(winv + (0,) + w) in W3
        assert parabolic_inclusion(b3, {0}, {2}, w) == expected


@pytest.mark.parametrize("name", ["A3", "I2(5)"])
def test_intersection_symmetry(name):
    sys = named_system(name)
    oracle = CayleyOracle(sys)
    subsets = [frozenset(c) for r in range(sys.rank + 1) for c in itertools.combinations(range(sys.rank), r)]
    for T, U in itertools.product(subsets, repeat=2):
        for w in oracle.elements[::2]:
            forward = conjugated_core_set(oracle, parabolic_intersection(sys, T, U, w))
            winv = inverse(sys, w)
            back = conjugated_core_set(oracle, parabolic_intersection(sys, U, T, winv))
            # W_U ∩ w^-1 W_T w = w^-1 (W_T ∩ w W_U w^-1) w
            conj = {oracle.key(winv + g + w) for g in CayleyOracle(sys, T).elements if oracle.key(g) in forward}
            assert back == conj


def test_inclusion_matches_intersection():
    b3 = named_system("B3")
    oracle = CayleyOracle(b3)
    for w in oracle.elements[::5]:
        for T, U in [({0}, {0, 1}), ({0, 1}, {1, 2}), ({2}, {0}), ({1}, {0, 1, 2})]:
            res = parabolic_intersection(b3, T, U, w)
            assert parabolic_inclusion(b3, T, U, w) == (res.core_generators == frozenset(T))
            assert reduce(b3, res.conjugator_a) == res.conjugator_a
