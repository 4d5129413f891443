import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxfa import catalog
from coxfa.classify import (
    AFFINE,
    COMPACT_HYPERBOLIC,
    FINITE,
    OTHER_INFINITE,
    gram_signature_oracle,
    is_finite,
    is_k_spherical,
    maximal_spherical_subsets,
    order,
    recognize_irreducible,
    v_of,
)
from coxfa.errors import CoxeterError
from coxfa.system import CoxeterSystem, components, induced_subsystem, parse_system
from coxfa.words import enumerate_group
from oracle import CayleyOracle
from systems import INF_DIHEDRAL, TRIANGLE_333, TRIANGLE_346, catalog_systems, triangle


def all_subsets(n):
    return [frozenset(c) for r in range(n + 1) for c in itertools.combinations(range(n), r)]


def test_recognition_examples():
    assert str(recognize_irreducible(catalog.named_system("I2(6)"))) == "Finite(I2(6))"
    assert str(recognize_irreducible(parse_system(TRIANGLE_346))) == "CompactHyperbolic(rank 3)"
    assert str(recognize_irreducible(parse_system(TRIANGLE_333))) == "Affine(~A2)"
    assert str(recognize_irreducible(parse_system(INF_DIHEDRAL))) == "Affine(~A1)"
    with pytest.raises(CoxeterError):
        recognize_irreducible(parse_system("gens a b"))


@pytest.mark.parametrize(
    "family, ranks",
    [("A", range(1, 9)), ("B", range(2, 9)), ("D", range(4, 9)), ("E", [6, 7, 8]), ("F", [4]), ("H", [3, 4])],
)
def test_finite_templates_recognized(family, ranks):
    for n in ranks:
        sys = catalog.named_system(f"{family}{n}")
        label = recognize_irreducible(sys)
        # rank two is always reported in dihedral form
        expected = {"A2": "I2(3)", "B2": "I2(4)"}.get(f"{family}{n}", f"{family}{n}")
        assert label.kind == FINITE and label.family == expected
        assert gram_signature_oracle(sys) == "positive-definite"


@pytest.mark.parametrize(
    "family, ranks",
    [("A", range(2, 8)), ("B", range(3, 8)), ("C", range(2, 8)), ("D", range(4, 8)),
     ("E", [6, 7, 8]), ("F", [4]), ("G", [2])],
)
def test_affine_templates_recognized(family, ranks):
    for n in ranks:
        sys = catalog.named_system(f"~{family}{n}")
        label = recognize_irreducible(sys)
        assert label.kind == AFFINE and label.family == f"~{family}{n}", (family, n, label)
        assert gram_signature_oracle(sys) == "positive-semidefinite-singular"


def test_relabelled_diagram_is_still_recognized():
    # E6 with generators listed in a scrambled order
    e6 = catalog.named_system("E6")
    perm = [3, 0, 5, 1, 4, 2]
    names = [f"t{i}" for i in range(6)]
    pairs = {
        (names[perm[i]], names[perm[j]]): e6.m(i, j)
        for i, j in itertools.combinations(range(6), 2)
    }
    assert str(recognize_irreducible(CoxeterSystem.from_pairs(names, pairs))) == "Finite(E6)"


@pytest.mark.parametrize(
    "text",
    [
        "gens a b c d\npair a b 4\npair b c 3\npair c d 5",
        "gens a b c d\npair a b 5\npair b c 3\npair c d 5",
        "gens a b c d e\npair a b 5\npair b c 3\npair c d 3\npair d e 3",
        "gens a b c\npair a b 3\npair b c 7\npair a c 2",
    ],
)
def test_lanner_systems(text):
    sys = parse_system(text)
    assert recognize_irreducible(sys).kind == COMPACT_HYPERBOLIC
    assert gram_signature_oracle(sys) == "indefinite"


def test_other_infinite():
    sys = parse_system("gens a b c\npair a b inf\npair b c inf\npair a c inf")
    assert recognize_irreducible(sys).kind == OTHER_INFINITE
    assert str(recognize_irreducible(sys)) == "OtherInfinite(rank 3)"


def test_gram_examples():
    assert gram_signature_oracle(catalog.named_system("A2")) == "positive-definite"
    assert gram_signature_oracle(parse_system(TRIANGLE_333)) == "positive-semidefinite-singular"
    assert gram_signature_oracle(parse_system(TRIANGLE_346)) == "indefinite"


def test_finiteness_and_order_examples():
    b3 = catalog.named_system("B3")
    t = parse_system(TRIANGLE_346)
    assert is_finite(t, set()) and order(t, set()) == 1
    assert order(b3) == 48
    assert order(t) == math.inf and not is_finite(t)
    assert order(t, {0, 2}) == 12


def test_sphericity_examples():
    t = parse_system(TRIANGLE_346)
    assert is_k_spherical(t, 2).holds
    rep = is_k_spherical(t, 3)
    assert not rep.holds and rep.witness == frozenset({0, 1, 2})
    assert is_k_spherical(t, 0).holds
    with pytest.raises(CoxeterError):
        is_k_spherical(t, -1)


def test_v_examples():
    assert v_of(parse_system(TRIANGLE_346)) == 2
    assert v_of(parse_system(INF_DIHEDRAL)) == 1
    assert v_of(catalog.named_system("B3")) == math.inf
    assert v_of(catalog.named_system("~A9")) == 9


def test_maximal_spherical_examples():
    assert maximal_spherical_subsets(catalog.named_system("B3"), 1) == [frozenset({0, 1, 2})]
    t = parse_system(TRIANGLE_346)
    assert maximal_spherical_subsets(t, 2) == [frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2})]
    assert maximal_spherical_subsets(parse_system(INF_DIHEDRAL), 1) == [frozenset({0}), frozenset({1})]


@pytest.mark.parametrize(
    "family, sizes",
    [("A", range(1, 8)), ("B", range(2, 7)), ("D", range(4, 7)), ("E", [6]), ("F", [4]), ("H", [3, 4])],
)
def test_order_table_matches_coset_enumeration(family, sizes):
    for n in sizes:
        name = f"{family}{n}"
        expected = catalog.family_order(name)
        assert len(enumerate_group(catalog.named_system(name), cap=10**6)) == expected


@pytest.mark.parametrize("name", ["A4", "B4", "D4", "F4", "H4", "D5"])
def test_order_table_matches_matrix_oracle(name):
    assert CayleyOracle(catalog.named_system(name)).order == catalog.family_order(name)


def test_dihedral_orders():
    for m in range(2, 13):
        sys = parse_system(f"gens a b\npair a b {m}")
        assert order(sys) == 2 * m == len(enumerate_group(sys))


@pytest.mark.parametrize("name", sorted(catalog_systems()))
def test_template_and_gram_agree_on_subsets(name):
    sys = catalog_systems()[name]
    for T in all_subsets(sys.rank):
        verdict = gram_signature_oracle(sys, T)
        assert verdict != "inconclusive"
        assert is_finite(sys, T) == (verdict == "positive-definite"), (name, T)
        if T and len(components(sys, T)) == 1:
            label = recognize_irreducible(induced_subsystem(sys, T))
            assert (label.kind == AFFINE) == (verdict == "positive-semidefinite-singular"), (name, T)


labels = st.sampled_from([2, 2, 3, 3, 4, 5, 6, math.inf])


@st.composite
def systems(draw, min_rank=1, max_rank=6):
    n = draw(st.integers(min_value=min_rank, max_value=max_rank))
    names = [f"g{i}" for i in range(n)]
    pairs = {(names[i], names[j]): draw(labels) for i, j in itertools.combinations(range(n), 2)}
    return CoxeterSystem.from_pairs(names, pairs)


@settings(max_examples=150, deadline=None)
@given(systems())
def test_random_systems_classification(sys):
    for T in all_subsets(sys.rank):
        verdict = gram_signature_oracle(sys, T)
        if verdict != "inconclusive":
            assert is_finite(sys, T) == (verdict == "positive-definite")
    if len(components(sys, sys.generators)) != 1:
        return
    label = recognize_irreducible(sys)
    proper_finite = all(is_finite(sys, sys.generators - {i}) for i in range(sys.rank))
    infinite = not is_finite(sys)
    if label.kind == COMPACT_HYPERBOLIC:
        assert 3 <= sys.rank <= 5
    assert (label.kind == COMPACT_HYPERBOLIC) == (infinite and proper_finite and label.kind != AFFINE)
    if label.kind == AFFINE:
        assert proper_finite and infinite


@settings(max_examples=60, deadline=None)
@given(systems(max_rank=5), st.integers(min_value=0, max_value=5), st.data())
def test_sphericity_monotone(sys, k, data):
    U = frozenset(data.draw(st.sets(st.sampled_from(range(sys.rank)))))
    T = frozenset(data.draw(st.sets(st.sampled_from(sorted(U)))) if U else set())
    rep = is_k_spherical(sys, k, U)
    if rep.holds:
        assert is_k_spherical(sys, k, T).holds
    else:
        assert len(rep.witness) <= k and rep.witness <= U and not is_finite(sys, rep.witness)


def test_triangle_sweep_against_gram():
    for p, q, r in itertools.combinations_with_replacement([2, 3, 4, 5, 6, 7, math.inf], 3):
        sys = triangle(*(("inf" if x == math.inf else x) for x in (p, q, r)))
        if len(components(sys, sys.generators)) != 1:
            continue
        kind = recognize_irreducible(sys).kind
        expected = {
            "positive-definite": FINITE,
            "positive-semidefinite-singular": AFFINE,
        }.get(gram_signature_oracle(sys))
        if expected is not None:
            assert kind == expected
        else:
            assert kind in (COMPACT_HYPERBOLIC, OTHER_INFINITE)
