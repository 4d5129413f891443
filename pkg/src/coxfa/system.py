"""Coxeter systems: validation, the text file format, subsystems and diagram components.

Generators are addressed by position everywhere in the library; names only
matter for input and output.  A subset of generators is a ``frozenset`` of
indices.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple, Union

from coxfa.errors import CoxeterError, ParseError

INF = math.inf

Label = Union[int, float]  # an int >= 1, or INF
GeneratorSet = FrozenSet[int]
Word = Tuple[int, ...]


def subset_key(T):
    """Deterministic ordering of subsets: by sorted members, lexicographically."""
    return tuple(sorted(T))


@dataclass(frozen=True, eq=False)
class CoxeterSystem:
    names: Tuple[str, ...]
    matrix: Tuple[Tuple[Label, ...], ...]
    # memo tables used by the word engine; never part of equality
    _cache: Dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.names)
        if len(set(self.names)) != n:
            raise CoxeterError(f"duplicate generator names in {self.names}")
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise CoxeterError("Coxeter matrix must be square with one row per generator")
        for i in range(n):
            if self.matrix[i][i] != 1:
                raise CoxeterError(f"diagonal entry for {self.names[i]} must be 1")
            for j in range(i + 1, n):
                m = self.matrix[i][j]
                if m != self.matrix[j][i]:
                    raise CoxeterError("Coxeter matrix must be symmetric")
                if m != INF and (not isinstance(m, int) or m < 2):
                    raise CoxeterError(
                        f"m({self.names[i]},{self.names[j]}) = {m}: off-diagonal "
                        "entries must be integers >= 2 or inf"
                    )

    def __eq__(self, other):
        if not isinstance(other, CoxeterSystem):
            return NotImplemented
        return self.names == other.names and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.names, self.matrix))

    @classmethod
    def from_pairs(cls, names: Sequence[str], pairs=None) -> "CoxeterSystem":
        """Build a system from generator names and ``{(name, name): m}``; other pairs get 2."""
        names = tuple(names)
        index = {name: i for i, name in enumerate(names)}
        n = len(names)
        rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        for (p, q), m in (pairs or {}).items():
            i, j = index[p], index[q]
            rows[i][j] = rows[j][i] = m
        return cls(names, tuple(tuple(r) for r in rows))

    @property
    def rank(self) -> int:
        return len(self.names)

    @property
    def generators(self) -> GeneratorSet:
        return frozenset(range(self.rank))

    def m(self, i: int, j: int) -> Label:
        return self.matrix[i][j]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise CoxeterError(f"unknown generator {name!r}") from None

    def subset(self, names: Iterable[str]) -> GeneratorSet:
        return frozenset(self.index(n) for n in names)

    def parse_subset(self, text: str) -> GeneratorSet:
        """``"a,b"`` -> indices; the empty string is the empty set."""
        parts = [p for p in text.replace(" ", "").split(",") if p]
        return self.subset(parts)

    def parse_word(self, text: str) -> Word:
        """Whitespace separated generator names; ``e`` is the empty word."""
        tokens = text.split()
        if tokens == ["e"] and "e" not in self.names:
            return ()
        return tuple(self.index(t) for t in tokens)

    def format_word(self, word: Sequence[int]) -> str:
        if not word:
            return "e"
        return " ".join(self.names[i] for i in word)

    def format_subset(self, T: Iterable[int]) -> str:
        return "{" + ",".join(self.names[i] for i in sorted(T)) + "}"

    def check_subset(self, T: Iterable[int]) -> GeneratorSet:
        T = frozenset(T)
        for i in T:
            if not (isinstance(i, int) and 0 <= i < self.rank):
                raise CoxeterError(f"generator index {i!r} out of range for rank {self.rank}")
        return T

    def fingerprint(self) -> str:
        return hashlib.sha256(format_system(self).encode()).hexdigest()[:16]


def format_label(m: Label) -> str:
    return "inf" if m == INF else str(m)


def parse_system(text: str) -> CoxeterSystem:
    names: List[str] = []
    pairs: Dict[Tuple[int, int], Label] = {}
    seen_gens = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if not seen_gens:
            if head != "gens":
                raise ParseError("first line must be 'gens <name> ...'", lineno)
            if len(set(rest)) != len(rest):
                raise ParseError("duplicate generator names", lineno)
            names = rest
            seen_gens = True
            continue
        if head != "pair":
            raise ParseError(f"expected 'pair', got {head!r}", lineno)
        if len(rest) != 3:
            raise ParseError("expected 'pair <name> <name> <m>'", lineno)
        p, q, value = rest
        for nm in (p, q):
            if nm not in names:
                raise ParseError(f"unknown generator {nm!r}", lineno)
        if p == q:
            raise ParseError(f"pair of a generator with itself ({p})", lineno)
        if value == "inf":
            m: Label = INF
        else:
            try:
                m = int(value)
            except ValueError:
                raise ParseError(f"malformed integer {value!r}", lineno) from None
            if m < 2:
                raise ParseError(f"m({p},{q}) = {m}: must be >= 2 or inf", lineno)
        i, j = sorted((names.index(p), names.index(q)))
        if (i, j) in pairs:
            raise ParseError(f"duplicate pair line for {p} {q}", lineno)
        pairs[(i, j)] = m
    if not seen_gens:
        raise ParseError("missing 'gens' line")
    return CoxeterSystem.from_pairs(names, {(names[i], names[j]): m for (i, j), m in pairs.items()})


def format_system(sys: CoxeterSystem) -> str:
    lines = ["gens " + " ".join(sys.names)]
    for i in range(sys.rank):
        for j in range(i + 1, sys.rank):
            if sys.m(i, j) != 2:
                lines.append(f"pair {sys.names[i]} {sys.names[j]} {format_label(sys.m(i, j))}")
    return "\n".join(lines) + "\n"


def induced_subsystem(sys: CoxeterSystem, T: Iterable[int]) -> CoxeterSystem:
    """The Coxeter system on ``T`` (in index order) with the restricted matrix."""
    idx = sorted(sys.check_subset(T))
    return CoxeterSystem(
        tuple(sys.names[i] for i in idx),
        tuple(tuple(sys.m(i, j) for j in idx) for i in idx),
    )


def components(sys: CoxeterSystem, T: Iterable[int]) -> List[GeneratorSet]:
    """Connected components of the Coxeter diagram restricted to ``T``.

    Edges join generators with ``m`` not in {1, 2}.  Components are returned
    ordered by their least member.
    """
    remaining = set(sys.check_subset(T))
    parts = []
    while remaining:
        start = min(remaining)
        comp = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for j in list(remaining):
                if j not in comp and sys.m(i, j) != 2 and j != i:
                    comp.add(j)
                    stack.append(j)
        remaining -= comp
        parts.append(frozenset(comp))
    return sorted(parts, key=min)


def is_irreducible(sys: CoxeterSystem, T: Iterable[int] = None) -> bool:
    T = sys.generators if T is None else frozenset(T)
    return len(components(sys, T)) == 1
