"""Standard Coxeter diagrams: the irreducible finite and affine families.

Each template is a dict ``{(i, j): m}`` of diagram edges on vertices
``0..rank-1`` (unlisted pairs commute).
"""

from __future__ import annotations

from math import factorial
from typing import Dict, Iterator, Tuple

from coxfa.system import INF, CoxeterSystem

Edges = Dict[Tuple[int, int], int]


def _path(labels) -> Edges:
    return {(i, i + 1): m for i, m in enumerate(labels)}


def _star(arms) -> Edges:
    """Vertex 0 is the centre; each arm is a path of 3-edges."""
    edges = {}
    nxt = 1
    for arm in arms:
        prev = 0
        for _ in range(arm):
            edges[(prev, nxt)] = 3
            prev = nxt
            nxt += 1
    return edges


def finite_template(family: str, rank: int) -> Edges:
    if family == "A":
        return _path([3] * (rank - 1))
    if family == "B":
        return _path([3] * (rank - 2) + [4])
    if family == "D":
        return _star([1, 1, rank - 3])
    if family == "E":
        return _star([1, 2, rank - 4])
    if family == "F":
        return _path([3, 4, 3])
    if family == "H":
        return _path([5] + [3] * (rank - 2))
    raise ValueError(family)


def affine_template(family: str, n: int) -> Edges:
    """Affine diagram of type ``~X_n`` (rank ``n + 1``)."""
    if family == "A":
        edges = _path([3] * n)
        edges[(0, n)] = 3
        return edges
    if family == "B":
        # fork at vertex 2, 4-label at the far end
        edges = {(0, 2): 3, (1, 2): 3}
        edges.update({(i, i + 1): 3 for i in range(2, n - 1)})
        edges[(n - 1, n)] = 4
        return edges
    if family == "C":
        return _path([4] + [3] * (n - 2) + [4])
    if family == "D":
        edges = {(0, 2): 3, (1, 2): 3}
        edges.update({(i, i + 1): 3 for i in range(2, n - 2)})
        edges[(n - 2, n - 1)] = 3
        edges[(n - 2, n)] = 3
        return edges
    if family == "E":
        return _star({6: [2, 2, 2], 7: [1, 3, 3], 8: [1, 2, 5]}[n])
    if family == "F":
        return _path([3, 3, 4, 3])
    if family == "G":
        return _path([3, 6])
    raise ValueError(family)


def finite_candidates(rank: int) -> Iterator[Tuple[str, Edges]]:
    """Finite irreducible types of the given rank (rank >= 3)."""
    yield f"A{rank}", finite_template("A", rank)
    yield f"B{rank}", finite_template("B", rank)
    if rank >= 4:
        yield f"D{rank}", finite_template("D", rank)
    if rank in (6, 7, 8):
        yield f"E{rank}", finite_template("E", rank)
    if rank == 4:
        yield "F4", finite_template("F", 4)
    if rank in (3, 4):
        yield f"H{rank}", finite_template("H", rank)


def affine_candidates(rank: int) -> Iterator[Tuple[str, Edges]]:
    """Affine irreducible types of the given rank (rank >= 3)."""
    n = rank - 1
    yield f"~A{n}", affine_template("A", n)
    yield f"~C{n}", affine_template("C", n)
    if n >= 3:
        yield f"~B{n}", affine_template("B", n)
    if n >= 4:
        yield f"~D{n}", affine_template("D", n)
    if n in (6, 7, 8):
        yield f"~E{n}", affine_template("E", n)
    if n == 4:
        yield "~F4", affine_template("F", 4)
    if n == 2:
        yield "~G2", affine_template("G", 2)


_EXCEPTIONAL_ORDERS = {
    "E6": 51840,
    "E7": 2903040,
    "E8": 696729600,
    "F4": 1152,
    "H3": 120,
    "H4": 14400,
}


def family_order(family: str) -> int:
    """Group order of a finite irreducible type such as ``"B3"`` or ``"I2(5)"``."""
    if family.startswith("I2("):
        return 2 * int(family[3:-1])
    if family in _EXCEPTIONAL_ORDERS:
        return _EXCEPTIONAL_ORDERS[family]
    letter, n = family[0], int(family[1:])
    if letter == "A":
        return factorial(n + 1)
    if letter == "B":
        return 2 ** n * factorial(n)
    if letter == "D":
        return 2 ** (n - 1) * factorial(n)
    raise ValueError(family)


def template_system(edges: Edges, rank: int, prefix: str = "s") -> CoxeterSystem:
    names = [f"{prefix}{i + 1}" for i in range(rank)]
    return CoxeterSystem.from_pairs(names, {(names[i], names[j]): m for (i, j), m in edges.items()})


def named_system(kind: str) -> CoxeterSystem:
    """Convenience constructor: ``"A3"``, ``"H4"``, ``"I2(7)"``, ``"I2(inf)"``, ``"~A2"`` ..."""
    if kind.startswith("I2("):
        inner = kind[3:-1]
        m = INF if inner in ("inf", "∞") else int(inner)
        return CoxeterSystem.from_pairs(["a", "b"], {("a", "b"): m})
    if kind.startswith("~"):
        family, n = kind[1], int(kind[2:])
        if family == "A" and n == 1:
            return CoxeterSystem.from_pairs(["s1", "s2"], {("s1", "s2"): INF})
        return template_system(affine_template(family, n), n + 1)
    family, rank = kind[0], int(kind[1:])
    if family == "A" and rank == 1:
        return CoxeterSystem.from_pairs(["s1"])
    return template_system(finite_template(family, rank), rank)
