"""The nerve L(W,S), its integral homology, and bounds on CAT(0) dimension."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from coxfa.classify import is_finite, subsets_of_rank, v_of
from coxfa.errors import CoxeterError
from coxfa.system import CoxeterSystem, GeneratorSet, subset_key

Simplex = Tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: Tuple[int, ...]
    facets: Tuple[GeneratorSet, ...]

    @property
    def dimension(self) -> int:
        return max((len(f) - 1 for f in self.facets), default=-1)

    def simplices(self, k: int) -> List[Simplex]:
        """All k-simplices as sorted vertex tuples, in lexicographic order."""
        found = set()
        for f in self.facets:
            if len(f) > k:
                found.update(itertools.combinations(sorted(f), k + 1))
        return sorted(found)

    def f_vector(self) -> List[int]:
        return [len(self.simplices(k)) for k in range(self.dimension + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.f_vector()))

    def induced(self, T) -> "SimplicialComplex":
        T = frozenset(T)
        faces = {frozenset(f) & T for f in self.facets}
        faces.discard(frozenset())
        facets = [f for f in faces if not any(f < g for g in faces)]
        return SimplicialComplex(tuple(sorted(T)), tuple(sorted(facets, key=subset_key)))


def build_nerve(sys: CoxeterSystem, T=None) -> SimplicialComplex:
    """Simplices are the nonempty U ⊆ T with W_U finite."""
    T = sys.generators if T is None else sys.check_subset(T)
    finite = [
        U
        for r in range(1, len(T) + 1)
        for U in subsets_of_rank(T, r)
        if is_finite(sys, U)
    ]
    fs = set(finite)
    facets = [U for U in finite if not any(U | {s} in fs for s in T - U)]
    return SimplicialComplex(tuple(sorted(T)), tuple(sorted(facets, key=subset_key)))


def boundary_matrix(cx: SimplicialComplex, k: int) -> List[List[int]]:
    """Matrix of the boundary map C_k -> C_{k-1}, rows indexed by (k-1)-simplices."""
    rows = cx.simplices(k - 1)
    cols = cx.simplices(k)
    where = {s: i for i, s in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for j, simplex in enumerate(cols):
        for i in range(len(simplex)):
            face = simplex[:i] + simplex[i + 1:]
            mat[where[face]][j] += (-1) ** i
    return mat


def smith_invariants(matrix: Sequence[Sequence[int]]) -> List[int]:
    """Nonzero diagonal entries of the Smith normal form, as a divisibility chain.

    Plain integer elimination; Python ints keep intermediate growth exact.
    """
    a = [list(map(int, row)) for row in matrix]
    out = []
    while a and a[0]:
        entries = [(abs(x), i, j) for i, row in enumerate(a) for j, x in enumerate(row) if x]
        if not entries:
            break
        while True:
            _, pi, pj = min((abs(x), i, j) for i, row in enumerate(a) for j, x in enumerate(row) if x)
            a[0], a[pi] = a[pi], a[0]
            for row in a:
                row[0], row[pj] = row[pj], row[0]
            p = a[0][0]
            for i in range(1, len(a)):
                q = a[i][0] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[0])]
            for j in range(1, len(a[0])):
                q = a[0][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[0]
            if any(a[i][0] for i in range(1, len(a))) or any(a[0][1:]):
                continue  # remainders are smaller than the pivot
            bad = next((i for i in range(1, len(a)) if any(x % p for x in a[i][1:])), None)
            if bad is None:
                break
            a[0] = [x + y for x, y in zip(a[0], a[bad])]
        out.append(abs(a[0][0]))
        a = [row[1:] for row in a[1:]]
    return out


@dataclass(frozen=True)
class HomologyProfile:
    betti: Tuple[int, ...]
    torsion: Tuple[Tuple[int, ...], ...]

    @property
    def reduced_betti(self) -> Tuple[int, ...]:
        if not self.betti:
            return ()
        return (self.betti[0] - 1,) + self.betti[1:]

    def nonzero_reduced_degrees(self) -> List[int]:
        return [k for k, (b, tor) in enumerate(zip(self.reduced_betti, self.torsion)) if b or tor]


def homology(cx: SimplicialComplex) -> HomologyProfile:
    dim = cx.dimension
    if dim < 0:
        return HomologyProfile((), ())
    counts = [len(cx.simplices(k)) for k in range(dim + 2)]
    invariants = [[] for _ in range(dim + 2)]  # invariants[k] for the map out of C_k
    for k in range(1, dim + 1):
        invariants[k] = smith_invariants(boundary_matrix(cx, k))
    betti = []
    torsion = []
    for k in range(dim + 1):
        betti.append(counts[k] - len(invariants[k]) - len(invariants[k + 1]))
        torsion.append(tuple(d for d in invariants[k + 1] if d > 1))
    return HomologyProfile(tuple(betti), tuple(torsion))


@dataclass(frozen=True)
class DimBounds:
    lower: int
    upper: int
    homology_subset: Optional[GeneratorSet]
    homology_degree: Optional[int]
    spherical_subset: Optional[GeneratorSet]
    spherical_n: Optional[int]
    upper_subset: GeneratorSet
    lower_unreduced: int
    convention: str = "reduced"


def dimss_bounds(sys: CoxeterSystem, subset_rank_cap: Optional[int] = None) -> DimBounds:
    """Bounds on the least dimension of a CAT(0) space with a proper semisimple W-action.

    Lower bound: 1 + the top degree of nonvanishing reduced homology of the
    nerves L(W_T, T), and 1 + the largest n with an infinite (n+1)-spherical
    special subgroup.  ``lower_unreduced`` repeats the computation with
    unreduced homology; for infinite W both give the same number.  Upper
    bound: the largest rank of a finite special subgroup.  Cost is exponential
    in ``subset_rank_cap`` (default |S|).
    """
    if is_finite(sys):
        raise CoxeterError("bounds undefined for finite groups")
    cap = sys.rank if subset_rank_cap is None else subset_rank_cap
    best_k, best_T = -1, None
    best_n, best_U = -1, None
    top_unreduced = -1
    for r in range(1, min(cap, sys.rank) + 1):
        for T in subsets_of_rank(sys.generators, r):
            prof = homology(build_nerve(sys, T))
            degrees = prof.nonzero_reduced_degrees()
            unreduced = [k for k, (b, tor) in enumerate(zip(prof.betti, prof.torsion)) if b or tor]
            if unreduced:
                top_unreduced = max(top_unreduced, unreduced[-1])
            if degrees and degrees[-1] > best_k:
                best_k, best_T = degrees[-1], T
            if not is_finite(sys, T):
                n = v_of(sys, T) - 1  # W_T is (n+1)-spherical and infinite
                if n > best_n:
                    best_n, best_U = n, T
    upper_subset = next(
        U
        for r in range(sys.rank, -1, -1)
        for U in subsets_of_rank(sys.generators, r)
        if is_finite(sys, U)
    )
    return DimBounds(
        lower=max(best_k + 1, best_n + 1),
        upper=len(upper_subset),
        homology_subset=best_T,
        homology_degree=best_k if best_T is not None else None,
        spherical_subset=best_U,
        spherical_n=best_n if best_U is not None else None,
        upper_subset=upper_subset,
        lower_unreduced=max(top_unreduced + 1, best_n + 1),
    )


def is_acyclic(profile: HomologyProfile) -> bool:
    return not any(profile.reduced_betti) and not any(profile.torsion)

