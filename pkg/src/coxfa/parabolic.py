"""Intersections and inclusions of parabolic subgroups.

For special subgroups A = W_T, B = W_U and w = a d b with d the
(T,U)-reduced element of A w B:

    A ∩ w B w⁻¹ = a ⟨T ∩ d U d⁻¹⟩ a⁻¹
"""

from __future__ import annotations

from dataclasses import dataclass

from coxfa.system import CoxeterSystem, GeneratorSet, Word
from coxfa.words import DEFAULT_CAP, double_coset_reduce, inverse, reduce


@dataclass(frozen=True)
class ParabolicIntersection:
    conjugator_a: Word
    core_generators: GeneratorSet  # indices into S, always a subset of T
    d: Word


def special_intersection(sys: CoxeterSystem, T, U) -> GeneratorSet:
    return sys.check_subset(T) & sys.check_subset(U)


def _conjugates_into(sys, d: Word, s: int, U, cap) -> bool:
    """True when d⁻¹ s d is a single generator lying in U."""
    image = reduce(sys, inverse(sys, d, cap) + (s,) + d, cap)
    return len(image) == 1 and image[0] in U


def parabolic_intersection(sys: CoxeterSystem, T, U, w, cap: int = DEFAULT_CAP) -> ParabolicIntersection:
    T = sys.check_subset(T)
    U = sys.check_subset(U)
    dec = double_coset_reduce(sys, T, U, w, cap)
    core = frozenset(s for s in T if _conjugates_into(sys, dec.d, s, U, cap))
    return ParabolicIntersection(dec.x, core, dec.d)


def parabolic_inclusion(sys: CoxeterSystem, T, U, w, cap: int = DEFAULT_CAP) -> bool:
    """Whether W_T ⊆ w W_U w⁻¹."""
    T = sys.check_subset(T)
    U = sys.check_subset(U)
    if len(T) > len(U):
        return False
    d = double_coset_reduce(sys, T, U, w, cap).d
    return all(_conjugates_into(sys, d, t, U, cap) for t in T)
