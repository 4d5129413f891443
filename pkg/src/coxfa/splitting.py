"""Simplex-of-groups splittings and the FA_n verdict engine.

Given an infinite special subgroup on S' of rank v+1, where v = v(W), every
proper subset of S' is finite, so W_{S'} is a compact Euclidean or hyperbolic
simplex reflection group.  Its natural v-simplex of groups has the local group
⟨A⟩ on the face opposite the vertices of A ⊊ S'; enlarging each local group
to ⟨A ∪ (S - S')⟩ gives a splitting of all of W.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from coxfa.angles import Angle, format_pi_multiple, gs_angle_formula
from coxfa.classify import (
    AFFINE,
    COMPACT_HYPERBOLIC,
    TypeLabel,
    is_finite,
    is_k_spherical,
    maximal_spherical_subsets,
    recognize_irreducible,
    subsets_of_rank,
    v_of,
)
from coxfa.errors import CoxeterError
from coxfa.system import INF, CoxeterSystem, GeneratorSet, induced_subsystem

EUCLIDEAN = "euclidean"
HYPERBOLIC = "hyperbolic"

YES = "YES"
NO = "NO"
CONJECTURAL_NO = "CONJECTURAL_NO"

# verdict bases
BASIS_SPHERICAL = "spherical-implies-FA_n: every special subgroup of rank <= n+1 is finite"
BASIS_TREES = "FA-iff-finite-labels: some m_ij = inf gives an amalgam splitting"
BASIS_TRIANGLE = "triangle-splitting-CAT(0): v = 2, angle sum <= pi"
BASIS_LARGE_V = "large-v-product: v >= 9 forces W = W' x W_(S-S'), Euclidean action"
BASIS_OPEN = "open-CAT(0)-conjecture: splitting for 3 <= v <= 8 not proven nonpositively curved"

UNCONDITIONAL = "UNCONDITIONAL"
CONDITIONAL = "CONDITIONAL-on-CAT(0)-Conjecture"


@dataclass(frozen=True)
class SimplexOfGroups:
    ambient: CoxeterSystem
    apex_generators: GeneratorSet  # S'
    faces: Dict[GeneratorSet, GeneratorSet] = field(hash=False)  # A ⊊ S' -> A ∪ (S - S')
    metric_tag: str
    apex_type: TypeLabel

    @property
    def dimension(self) -> int:
        return len(self.apex_generators) - 1

    @property
    def rest(self) -> GeneratorSet:
        return self.ambient.generators - self.apex_generators

    def vertex_group(self, p: int) -> GeneratorSet:
        """Local group at the vertex of the simplex indexed by ``p`` in S'."""
        return self.faces[self.apex_generators - {p}]

    def simplex_of(self, A: GeneratorSet) -> GeneratorSet:
        """Vertices (indexed by S') spanning the face carrying the group on A."""
        return self.apex_generators - A


def _check_colimit(spl: SimplexOfGroups) -> None:
    sys = spl.ambient
    for s in range(sys.rank):
        simplices = [spl.simplex_of(A) for A, G in spl.faces.items() if s in G]
        if not simplices:
            raise AssertionError(f"generator {sys.names[s]} lies in no local group")
        present = set(simplices)
        for sigma in simplices:
            for r in range(1, len(sigma)):
                for tau in itertools.combinations(sorted(sigma), r):
                    if frozenset(tau) not in present:
                        raise AssertionError("faces containing a generator must form a subcomplex")
        vertices = set().union(*simplices)
        reach = {min(vertices)}
        stack = [min(vertices)]
        while stack:
            p = stack.pop()
            for q in vertices - reach:
                if frozenset((p, q)) in present:
                    reach.add(q)
                    stack.append(q)
        if reach != vertices:
            raise AssertionError("faces containing a generator must form a connected subcomplex")
    for s, t in itertools.combinations(range(sys.rank), 2):
        if sys.m(s, t) != INF and not any({s, t} <= G for G in spl.faces.values()):
            raise AssertionError(
                f"relation between {sys.names[s]} and {sys.names[t]} lives in no local group"
            )


def v_splitting(sys: CoxeterSystem, S_prime) -> SimplexOfGroups:
    S_prime = sys.check_subset(S_prime)
    v = v_of(sys)
    if v == math.inf:
        raise CoxeterError("W is finite, it has no v-splitting")
    if len(S_prime) != v + 1:
        raise CoxeterError(f"S' must have rank v+1 = {v + 1}, got {len(S_prime)}")
    if is_finite(sys, S_prime):
        raise CoxeterError(f"{sys.format_subset(S_prime)} generates a finite group")
    for p in S_prime:
        if not is_finite(sys, S_prime - {p}):
            raise CoxeterError("every proper subset of S' must generate a finite group")
    label = recognize_irreducible(induced_subsystem(sys, S_prime))
    if label.kind == AFFINE:
        tag = EUCLIDEAN
    elif label.kind == COMPACT_HYPERBOLIC:
        tag = HYPERBOLIC
    else:
        raise AssertionError(f"S' subsystem recognized as {label}")
    rest = sys.generators - S_prime
    faces = {}
    for r in range(len(S_prime)):
        for A in itertools.combinations(sorted(S_prime), r):
            faces[frozenset(A)] = frozenset(A) | rest
    spl = SimplexOfGroups(sys, S_prime, faces, tag, label)
    _check_colimit(spl)
    return spl


def choose_apex(sys: CoxeterSystem) -> Optional[GeneratorSet]:
    """Lexicographically least infinite subset of rank v+1 (None if W is finite)."""
    v = v_of(sys)
    if v == math.inf:
        return None
    for T in subsets_of_rank(sys.generators, v + 1):
        if not is_finite(sys, T):
            return T
    raise AssertionError("v(W) admits an infinite subset of rank v+1")


@dataclass(frozen=True)
class Curvature:
    angles: Tuple[Tuple[int, Angle], ...]  # (vertex index in S', angle at that vertex)
    total: Fraction  # angle sum divided by pi
    comparison: str  # "<", "=" or ">" against pi
    verdict: str

    def describe(self) -> str:
        ordered = sorted((a for _, a in self.angles), key=lambda a: a.as_fraction(), reverse=True)
        parts = " ".join(str(a) for a in ordered)
        return f"angles {parts}, sum {format_pi_multiple(self.total)}"


def triangle_curvature(spl: SimplexOfGroups) -> Curvature:
    if spl.dimension != 2:
        raise CoxeterError("curvature verdicts exist only for triangle splittings (v = 2)")
    rest = spl.rest
    angles = []
    for p in sorted(spl.apex_generators):
        q, r = sorted(spl.apex_generators - {p})
        # the two edges at vertex p carry {r} ∪ rest and {q} ∪ rest over rest
        angles.append((p, gs_angle_formula(spl.ambient, {r} | rest, {q} | rest)))
    total = sum((a.as_fraction() for _, a in angles), Fraction(0))
    if total > 1:
        raise AssertionError(f"angle sum {total}pi exceeds pi for a valid splitting")
    if total < 1:
        return Curvature(tuple(angles), total, "<", "CAT(-1)")
    return Curvature(tuple(angles), total, "=", "CAT(0)")


@dataclass(frozen=True)
class FaVerdict:
    n: int
    status: str
    basis: str
    v: object  # int or math.inf
    witness: Optional[GeneratorSet] = None
    splitting: Optional[SimplexOfGroups] = None
    curvature: Optional[Curvature] = None


def fa_verdict(sys: CoxeterSystem, n: int) -> FaVerdict:
    if n < 1:
        raise CoxeterError("n must be >= 1")
    v = v_of(sys)
    if is_k_spherical(sys, n + 1).holds:
        return FaVerdict(n, YES, BASIS_SPHERICAL, v)
    apex = choose_apex(sys)
    spl = v_splitting(sys, apex)
    if is_finite(sys, apex):
        raise AssertionError("witness subgroup must be infinite")
    if v == 1:
        return FaVerdict(n, NO, BASIS_TREES, v, apex, spl)
    if v == 2:
        return FaVerdict(n, NO, BASIS_TRIANGLE, v, apex, spl, triangle_curvature(spl))
    if v >= 9:
        return FaVerdict(n, NO, BASIS_LARGE_V, v, apex, spl)
    return FaVerdict(n, CONJECTURAL_NO, BASIS_OPEN, v, apex, spl)


@dataclass(frozen=True)
class MaximalFaReport:
    n: int
    subsets: Tuple[GeneratorSet, ...]
    tag: str
    open_v: Tuple[int, ...]  # values 3..8 of v(W_T) met by the containment argument


def maximal_fa_subgroups(sys: CoxeterSystem, n: int) -> MaximalFaReport:
    """Maximal (n+1)-spherical special subsets, with the status of the claim that
    their conjugates are exactly the maximal FA_n subgroups.

    The containment argument splits W, then special subgroups of W, as long
    as they fail to be (n+1)-spherical; it needs the CAT(0) property of each
    splitting used.  That property is proven for v <= 2 and v >= 9 only.
    """
    subsets = tuple(maximal_spherical_subsets(sys, n))
    open_v = set()
    for r in range(sys.rank + 1):
        for T in subsets_of_rank(sys.generators, r):
            if is_k_spherical(sys, n + 1, T).holds:
                continue
            vt = v_of(sys, T)
            if 3 <= vt <= 8:
                open_v.add(vt)
    tag = CONDITIONAL if open_v else UNCONDITIONAL
    return MaximalFaReport(n, subsets, tag, tuple(sorted(open_v)))
