"""Word problem via elementary M-operations.

An element is represented by its canonical word: the ShortLex-least reduced
expression.  Two reduced expressions of the same element are connected by
braid moves alone, so the braid closure of any reduced expression contains the
canonical one.  Reduction alternates braid closure with deletion of an ``ss``
pair until no closure member contains one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Sequence

from coxfa.cayley import cayley_table
from coxfa.errors import ClosureTooLarge, CoxeterError
from coxfa.system import INF, CoxeterSystem, GeneratorSet, Word

DEFAULT_CAP = 1_000_000


def alternating(s: int, t: int, length: int) -> Word:
    return tuple(s if k % 2 == 0 else t for k in range(length))


def braid_moves(sys: CoxeterSystem, w: Word) -> Iterator[Word]:
    """Words one Type (II) operation away from ``w``."""
    n = len(w)
    for i in range(n - 1):
        s, t = w[i], w[i + 1]
        if s == t:
            continue
        m = sys.m(s, t)
        if m == INF or i + m > n:
            continue
        if w[i:i + m] == alternating(s, t, m):
            yield w[:i] + alternating(t, s, m) + w[i + m:]


def _find_square(w: Word):
    for i in range(len(w) - 1):
        if w[i] == w[i + 1]:
            return i
    return None


def type2_closure(sys: CoxeterSystem, w: Sequence[int], cap: int = DEFAULT_CAP) -> FrozenSet[Word]:
    """All words reachable from ``w`` by braid moves."""
    w = tuple(w)
    seen = {w}
    queue = deque([w])
    while queue:
        for nxt in braid_moves(sys, queue.popleft()):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise ClosureTooLarge(f"braid closure exceeds cap {cap}")
                queue.append(nxt)
    return frozenset(seen)


def _canonicalize(sys: CoxeterSystem, w: Word, cap: int) -> Word:
    while True:
        closure = type2_closure(sys, w, cap)
        for member in sorted(closure):
            i = _find_square(member)
            if i is not None:
                w = member[:i] + member[i + 2:]
                break
        else:
            return min(closure)


def _append(sys: CoxeterSystem, g: Word, s: int, cap: int) -> Word:
    # g is canonical; the memo is keyed by (g, s) and lives on the system
    table = sys._cache.setdefault("append", {})
    key = (g, s)
    hit = table.get(key)
    if hit is None:
        hit = _canonicalize(sys, g + (s,), cap)
        table[key] = hit  # a single dict store; concurrent writers agree on the value
    return hit


def reduce(sys: CoxeterSystem, w: Iterable[int], cap: int = DEFAULT_CAP) -> Word:
    """Canonical reduced word of the element represented by ``w``.

    The word is consumed letter by letter, so each canonicalization starts
    from a reduced prefix followed by one generator.
    """
    g: Word = ()
    for s in w:
        if not 0 <= s < sys.rank:
            raise CoxeterError(f"letter {s!r} out of range for rank {sys.rank}")
        g = _append(sys, g, s, cap)
    return g


def reduction_steps(sys: CoxeterSystem, w: Sequence[int], cap: int = DEFAULT_CAP) -> List[Word]:
    """An explicit M-reduction of ``w`` to its canonical word.

    Consecutive entries differ by exactly one elementary operation.
    """
    cur = tuple(w)
    path = [cur]
    while True:
        parent = {cur: None}
        queue = deque([cur])
        target = None
        order = []
        while queue:
            word = queue.popleft()
            order.append(word)
            if _find_square(word) is not None:
                target = word
                break
            for nxt in braid_moves(sys, word):
                if nxt not in parent:
                    parent[nxt] = word
                    if len(parent) > cap:
                        raise ClosureTooLarge(f"braid closure exceeds cap {cap}")
                    queue.append(nxt)
        if target is None:
            target = min(order)
        chain = []
        node = target
        while node is not None:
            chain.append(node)
            node = parent[node]
        path.extend(reversed(chain[:-1]))
        i = _find_square(target)
        if i is None:
            return path
        cur = target[:i] + target[i + 2:]
        path.append(cur)


def equal(sys: CoxeterSystem, w1, w2, cap: int = DEFAULT_CAP) -> bool:
    return reduce(sys, w1, cap) == reduce(sys, w2, cap)


def length(sys: CoxeterSystem, w, cap: int = DEFAULT_CAP) -> int:
    return len(reduce(sys, w, cap))


def is_reduced(sys: CoxeterSystem, w, cap: int = DEFAULT_CAP) -> bool:
    return length(sys, w, cap) == len(w)


def multiply(sys: CoxeterSystem, g, h, cap: int = DEFAULT_CAP) -> Word:
    return reduce(sys, tuple(g) + tuple(h), cap)


def inverse(sys: CoxeterSystem, g, cap: int = DEFAULT_CAP) -> Word:
    return reduce(sys, tuple(reversed(tuple(g))), cap)


def left_descents(sys: CoxeterSystem, g, cap: int = DEFAULT_CAP) -> GeneratorSet:
    g = reduce(sys, g, cap)
    return frozenset(s for s in range(sys.rank) if len(reduce(sys, (s,) + g, cap)) < len(g))


def right_descents(sys: CoxeterSystem, g, cap: int = DEFAULT_CAP) -> GeneratorSet:
    g = reduce(sys, g, cap)
    return frozenset(s for s in range(sys.rank) if len(_append(sys, g, s, cap)) < len(g))


@dataclass(frozen=True)
class DoubleCosetDecomposition:
    """``w = x d y`` with ``x`` in W_T, ``y`` in W_U, ``d`` the (T,U)-reduced element."""

    x: Word
    d: Word
    y: Word


def double_coset_reduce(sys: CoxeterSystem, T, U, w, cap: int = DEFAULT_CAP) -> DoubleCosetDecomposition:
    T = sys.check_subset(T)
    U = sys.check_subset(U)
    d = reduce(sys, w, cap)
    x: Word = ()
    y: Word = ()
    changed = True
    while changed:
        changed = False
        while True:
            desc = sorted(left_descents(sys, d, cap) & T)
            if not desc:
                break
            t = desc[0]
            d = reduce(sys, (t,) + d, cap)
            x = x + (t,)
            changed = True
        while True:
            desc = sorted(right_descents(sys, d, cap) & U)
            if not desc:
                break
            u = desc[0]
            d = _append(sys, d, u, cap)
            y = (u,) + y
            changed = True
    return DoubleCosetDecomposition(reduce(sys, x, cap), d, reduce(sys, y, cap))


def alt_length(part_a, part_b, w: Sequence[int]) -> int:
    """Least number of alternating blocks (A, B, A, ... or B, A, B, ...) covering ``w``.

    Letters in both parts may join either kind of block.
    """
    part_a, part_b = frozenset(part_a), frozenset(part_b)
    if not w:
        return 0
    big = len(w) + 1
    best = {}  # side -> fewest blocks for the prefix, last block on that side
    for k, s in enumerate(w):
        sides = [side for side, part in (("A", part_a), ("B", part_b)) if s in part]
        if not sides:
            raise CoxeterError(f"letter {s!r} lies in neither part")
        nxt = {}
        for side in sides:
            if k == 0:
                nxt[side] = 1
            else:
                other = "B" if side == "A" else "A"
                nxt[side] = min(best.get(side, big), best.get(other, big) + 1)
        best = nxt
    return min(best.values())


def enumerate_group(sys: CoxeterSystem, T=None, cap: int = 100_000) -> List[Word]:
    """Elements of W_T as canonical words, ShortLex sorted.

    Uses exact coset enumeration rather than the rewriting engine, so it
    doubles as an independent oracle.  Raises :class:`GroupTooLarge` once
    more than ``cap`` elements are found, which only suggests (never proves)
    that W_T is infinite.
    """
    return list(cayley_table(sys, T, cap).words)
