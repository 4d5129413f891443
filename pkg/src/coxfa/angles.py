"""Gersten-Stallings angles between special subgroups.

Angles are exact: either zero or pi/m for an integer m >= 2, and sums are
compared as rational multiples of pi.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from coxfa.errors import CoxeterError
from coxfa.system import INF, CoxeterSystem
from coxfa.cayley import cayley_table


@dataclass(frozen=True)
class Angle:
    denominator: Optional[int] = None  # None encodes the zero angle

    def __post_init__(self):
        if self.denominator is not None and self.denominator < 2:
            raise ValueError("nonzero angles are pi/m with m >= 2")

    @property
    def is_zero(self) -> bool:
        return self.denominator is None

    def as_fraction(self) -> Fraction:
        """The angle divided by pi."""
        return Fraction(0) if self.denominator is None else Fraction(1, self.denominator)

    def __str__(self):
        return "0" if self.denominator is None else f"pi/{self.denominator}"


ZERO = Angle()


def format_pi_multiple(x: Fraction) -> str:
    if x == 0:
        return "0"
    num = "" if x.numerator == 1 else str(x.numerator)
    return f"{num}pi" if x.denominator == 1 else f"{num}pi/{x.denominator}"


def gs_angle_formula(sys: CoxeterSystem, T, U) -> Angle:
    T = sys.check_subset(T)
    U = sys.check_subset(U)
    if T == U:
        raise CoxeterError("the angle needs two distinct special subgroups")
    if T <= U or U <= T:
        return ZERO
    m = min(sys.m(i, j) for i in T - U for j in U - T)
    return ZERO if m == INF else Angle(m)


def girth(num_vertices: int, edges: List[Tuple[int, int]]) -> Optional[int]:
    """Length of the shortest cycle of a multigraph, None if it is a forest."""
    adj = [[] for _ in range(num_vertices)]
    for e, (u, v) in enumerate(edges):
        adj[u].append((v, e))
        adj[v].append((u, e))
    best = None
    for root in range(num_vertices):
        dist = {root: 0}
        via = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for v, e in adj[u]:
                if e == via[u]:
                    continue
                if v not in dist:
                    dist[v] = dist[u] + 1
                    via[v] = e
                    queue.append(v)
                else:
                    cycle = dist[u] + dist[v] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


def _coset_labels(n: int, right_mult, gens) -> List[int]:
    """Component label of every element under right multiplication by ``gens``."""
    label = [-1] * n
    count = 0
    for start in range(n):
        if label[start] >= 0:
            continue
        label[start] = count
        stack = [start]
        while stack:
            g = stack.pop()
            for s in gens:
                h = right_mult[g][s]
                if label[h] < 0:
                    label[h] = count
                    stack.append(h)
        count += 1
    return label


def coset_graph(sys: CoxeterSystem, T, U, cap: int = 100_000):
    """Bipartite coset graph inside W_{T ∪ U}.

    Vertices are the left cosets of W_T followed by those of W_U; there is one
    edge per left coset of W_{T ∩ U}.  Returns ``(num_vertices, edges)``.
    """
    T = sys.check_subset(T)
    U = sys.check_subset(U)
    ambient = T | U
    table = cayley_table(sys, ambient, cap)
    right_mult = [dict(zip(table.gens, row)) for row in table.right]
    n = table.order
    t_label = _coset_labels(n, right_mult, sorted(T))
    u_label = _coset_labels(n, right_mult, sorted(U))
    k_label = _coset_labels(n, right_mult, sorted(T & U))
    offset = max(t_label) + 1
    edges = {}
    for g in range(n):
        edges.setdefault(k_label[g], (t_label[g], offset + u_label[g]))
    return offset + max(u_label) + 1, [edges[k] for k in sorted(edges)]


def gs_angle_oracle(sys: CoxeterSystem, T, U, cap: int = 100_000) -> Angle:
    """Angle read off the girth of the coset graph.

    Only W_{T ∪ U} is enumerated; the coset graph in W is a disjoint union of
    copies of that one, so the girth is the same.
    """
    T = sys.check_subset(T)
    U = sys.check_subset(U)
    if T == U:
        raise CoxeterError("the angle needs two distinct special subgroups")
    nv, edges = coset_graph(sys, T, U, cap)
    g = girth(nv, edges)
    if g is None:
        return ZERO
    if g % 2:
        raise AssertionError("coset graph is bipartite; odd girth is impossible")
    return Angle(g // 2)
