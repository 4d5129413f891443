"""Type recognition, finiteness and sphericity of special subgroups."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import List, Optional

import networkx as nx
import numpy as np

from coxfa import catalog
from coxfa.errors import CoxeterError
from coxfa.system import (
    INF,
    CoxeterSystem,
    GeneratorSet,
    components,
    induced_subsystem,
    subset_key,
)

FINITE = "finite"
AFFINE = "affine"
COMPACT_HYPERBOLIC = "compact-hyperbolic"
OTHER_INFINITE = "other-infinite"


@dataclass(frozen=True)
class TypeLabel:
    kind: str
    rank: int
    family: Optional[str] = None

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE

    def __str__(self):
        if self.kind == FINITE:
            return f"Finite({self.family})"
        if self.kind == AFFINE:
            return f"Affine({self.family})"
        if self.kind == COMPACT_HYPERBOLIC:
            return f"CompactHyperbolic(rank {self.rank})"
        return f"OtherInfinite(rank {self.rank})"


@dataclass(frozen=True)
class SphericityReport:
    k: int
    holds: bool
    witness: Optional[GeneratorSet] = None


def _diagram(sys: CoxeterSystem) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(sys.rank))
    for i, j in itertools.combinations(range(sys.rank), 2):
        if sys.m(i, j) != 2:
            g.add_edge(i, j, m=sys.m(i, j))
    return g


def _template_graph(edges, rank) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(rank))
    for (i, j), m in edges.items():
        g.add_edge(i, j, m=m)
    return g


def _fingerprint(g: nx.Graph):
    return (
        sorted(d for _, d in g.degree()),
        sorted(data["m"] for _, _, data in g.edges(data=True)),
    )


def _match(diagram: nx.Graph, candidates) -> Optional[str]:
    fp = _fingerprint(diagram)
    for family, edges in candidates:
        tg = _template_graph(edges, diagram.number_of_nodes())
        if _fingerprint(tg) != fp:
            continue
        if nx.is_isomorphic(diagram, tg, edge_match=lambda a, b: a["m"] == b["m"]):
            return family
    return None


def _finite_family(sub: CoxeterSystem) -> Optional[str]:
    """Finite family of an irreducible system, or None when it is infinite."""
    if sub.rank == 1:
        return "A1"
    if sub.rank == 2:
        m = sub.m(0, 1)
        return None if m == INF else f"I2({m})"
    return _match(_diagram(sub), catalog.finite_candidates(sub.rank))


def recognize_irreducible(sys: CoxeterSystem) -> TypeLabel:
    if sys.rank == 0 or len(components(sys, sys.generators)) != 1:
        raise CoxeterError("recognize_irreducible needs a connected (irreducible) diagram")
    cache = sys._cache.setdefault("type", {})
    if "whole" in cache:
        return cache["whole"]
    rank = sys.rank
    family = _finite_family(sys)
    if family is not None:
        label = TypeLabel(FINITE, rank, family)
    elif rank == 2:
        label = TypeLabel(AFFINE, rank, "~A1")
    else:
        family = _match(_diagram(sys), catalog.affine_candidates(rank))
        if family is not None:
            label = TypeLabel(AFFINE, rank, family)
        elif all(
            is_finite(sys, sys.generators - {i}) for i in range(rank)
        ):
            label = TypeLabel(COMPACT_HYPERBOLIC, rank)
        else:
            label = TypeLabel(OTHER_INFINITE, rank)
    cache["whole"] = label
    return label


def component_types(sys: CoxeterSystem, T=None):
    """``[(component, TypeLabel)]`` for the diagram on ``T``."""
    T = sys.generators if T is None else sys.check_subset(T)
    return [(c, recognize_irreducible(induced_subsystem(sys, c))) for c in components(sys, T)]


def is_finite(sys: CoxeterSystem, T=None) -> bool:
    T = sys.generators if T is None else sys.check_subset(T)
    cache = sys._cache.setdefault("finite", {})
    hit = cache.get(T)
    if hit is None:
        hit = all(
            _finite_family(induced_subsystem(sys, c)) is not None for c in components(sys, T)
        )
        cache[T] = hit
    return hit


def order(sys: CoxeterSystem, T=None):
    """|W_T| from the table of irreducible orders, or ``math.inf``."""
    T = sys.generators if T is None else sys.check_subset(T)
    total = 1
    for c in components(sys, T):
        family = _finite_family(induced_subsystem(sys, c))
        if family is None:
            return math.inf
        total *= catalog.family_order(family)
    return total


def subsets_of_rank(T, k):
    return [frozenset(c) for c in itertools.combinations(sorted(T), k)]


def is_k_spherical(sys: CoxeterSystem, k: int, T=None) -> SphericityReport:
    """Every special subgroup of rank <= k is finite (relative to ``T``).

    Checking rank ``min(k, |T|)`` suffices; on failure the witness is an
    infinite subset of least rank.
    """
    if k < 0:
        raise CoxeterError("k must be >= 0")
    T = sys.generators if T is None else sys.check_subset(T)
    top = min(k, len(T))
    if all(is_finite(sys, U) for U in subsets_of_rank(T, top)):
        return SphericityReport(k, True)
    for r in range(1, top + 1):
        for U in subsets_of_rank(T, r):
            if not is_finite(sys, U):
                return SphericityReport(k, False, U)
    raise AssertionError("unreachable: some subset of rank <= k was infinite")


def v_of(sys: CoxeterSystem, T=None):
    """Largest m with W_T m-spherical; ``math.inf`` if W_T is finite."""
    T = sys.generators if T is None else sys.check_subset(T)
    if is_finite(sys, T):
        return math.inf
    m = 0
    while is_k_spherical(sys, m + 1, T).holds:
        m += 1
    return m


def gram_signature_oracle(sys: CoxeterSystem, T=None, tol: float = 1e-9) -> str:
    """Signature of the cosine matrix ``B_ij = -cos(pi / m_ij)`` on ``T``.

    Returns ``positive-definite``, ``positive-semidefinite-singular``,
    ``indefinite``, or ``inconclusive`` when the smallest eigenvalue is too
    close to zero to call (within ``100 * tol`` but outside ``tol``).
    """
    T = sys.generators if T is None else sys.check_subset(T)
    idx = sorted(T)
    if not idx:
        return "positive-definite"
    B = np.empty((len(idx), len(idx)))
    for a, i in enumerate(idx):
        for b, j in enumerate(idx):
            m = sys.m(i, j)
            B[a, b] = -1.0 if m == INF else -math.cos(math.pi / m)
    lowest = float(np.linalg.eigvalsh(B).min())
    if lowest > 100 * tol:
        return "positive-definite"
    if abs(lowest) <= tol:
        return "positive-semidefinite-singular"
    if lowest < -100 * tol:
        return "indefinite"
    return "inconclusive"


def is_spherical_subset(sys: CoxeterSystem, T, k: int) -> bool:
    return is_k_spherical(sys, k, T).holds


def maximal_spherical_subsets(sys: CoxeterSystem, n: int) -> List[GeneratorSet]:
    """Inclusion-maximal T with W_T (n+1)-spherical."""
    if n < 1:
        raise CoxeterError("n must be >= 1")
    S = sys.generators
    good = [
        frozenset(T)
        for r in range(sys.rank + 1)
        for T in itertools.combinations(range(sys.rank), r)
        if is_spherical_subset(sys, T, n + 1)
    ]
    goodset = set(good)
    maximal = [T for T in good if not any(T | {s} in goodset for s in S - T)]
    return sorted(maximal, key=subset_key)
