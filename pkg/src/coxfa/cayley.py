"""Exact Cayley tables of finite special subgroups by Todd-Coxeter coset enumeration.

Cosets of the trivial subgroup are group elements, so a completed coset
table is the right-multiplication table of W_T.  Generators are involutions,
which lets one column serve as its own inverse: ``c.s = d`` iff ``d.s = c``.
Relators are the braid words ``(st)^m`` for finite ``m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from coxfa.errors import GroupTooLarge
from coxfa.system import INF, CoxeterSystem, Word


@dataclass(frozen=True)
class CayleyTable:
    gens: Tuple[int, ...]  # generator indices of the ambient system
    words: Tuple[Word, ...]  # canonical words, ShortLex sorted; words[0] is the identity
    right: Tuple[Tuple[int, ...], ...]  # right[i][k] = index of words[i] * gens[k]

    @property
    def order(self) -> int:
        return len(self.words)


class _CosetTable:
    def __init__(self, ngens: int, limit: int):
        self.ngens = ngens
        self.limit = limit
        self.rows: List[List[Optional[int]]] = [[None] * ngens]
        self.parent = [0]

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def alive(self, c: int) -> bool:
        return self.parent[c] == c

    def define(self, c: int, x: int) -> None:
        if len(self.rows) >= self.limit:
            raise GroupTooLarge(f"coset enumeration exceeded {self.limit} cosets (possibly infinite)")
        d = len(self.rows)
        self.rows.append([None] * self.ngens)
        self.parent.append(d)
        self.rows[c][x] = d
        self.rows[d][x] = c

    def _merge(self, a: int, b: int, queue: List[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        lo, hi = min(a, b), max(a, b)
        self.parent[hi] = lo
        queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: List[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.ngens):
                f = self.rows[e][x]
                if f is None:
                    continue
                self.rows[f][x] = None
                e1, f1 = self.rep(e), self.rep(f)
                if self.rows[e1][x] is not None:
                    self._merge(f1, self.rows[e1][x], queue)
                elif self.rows[f1][x] is not None:
                    self._merge(e1, self.rows[f1][x], queue)
                else:
                    self.rows[e1][x] = f1
                    self.rows[f1][x] = e1

    def scan_and_fill(self, c: int, rel: Tuple[int, ...]) -> None:
        rows = self.rows
        f = b = c
        i, j = 0, len(rel) - 1
        while True:
            while i <= j and rows[f][rel[i]] is not None:
                f = rows[f][rel[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and rows[b][rel[j]] is not None:
                b = rows[b][rel[j]]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                rows[f][rel[i]] = b
                rows[b][rel[i]] = f
                return
            self.define(f, rel[i])


def _relators(sys: CoxeterSystem, gens: Tuple[int, ...]):
    rels = []
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            m = sys.m(gens[a], gens[b])
            if m != INF:
                rels.append((a, b) * m)
    return rels


def cayley_table(sys: CoxeterSystem, T=None, cap: int = 100_000) -> CayleyTable:
    """Enumerate W_T exactly; raise :class:`GroupTooLarge` beyond ``cap`` elements.

    Coset enumeration may define more cosets than the final order, so it is
    allowed a working budget of a few times ``cap`` before giving up.
    """
    T = sys.generators if T is None else sys.check_subset(T)
    gens = tuple(sorted(T))
    k = len(gens)
    if k == 0:
        return CayleyTable(gens, ((),), ((),))
    table = _CosetTable(k, limit=8 * cap + 64)
    rels = _relators(sys, gens)
    c = 0
    while c < len(table.rows):
        if table.alive(c):
            for rel in rels:
                table.scan_and_fill(c, rel)
                if not table.alive(c):
                    break
            if table.alive(c):
                for x in range(k):
                    if table.rows[c][x] is None:
                        table.define(c, x)
        c += 1
    # breadth-first from the identity: each layer stays ShortLex sorted, so the
    # first word reaching a coset is its least reduced expression
    start = table.rep(0)
    index = {start: 0}
    order = [start]
    words: List[Word] = [()]
    head = 0
    while head < len(order):
        cur = order[head]
        for x in range(k):
            nxt = table.rep(table.rows[cur][x])
            if nxt not in index:
                if len(order) >= cap:
                    raise GroupTooLarge(f"group larger than cap {cap} (possibly infinite)")
                index[nxt] = len(order)
                order.append(nxt)
                words.append(words[head] + (gens[x],))
        head += 1
    right = tuple(
        tuple(index[table.rep(table.rows[cur][x])] for x in range(k)) for cur in order
    )
    return CayleyTable(gens, tuple(words), right)
