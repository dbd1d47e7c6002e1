"""Simple graphs, ordered partitions into independent sets, and c(G)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable

from .cartan import BorcherdsCartanMatrix


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple[int, ...]
    edges: frozenset[frozenset[int]]

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[Iterable[int]]) -> "SimpleGraph":
        vs = tuple(sorted(set(vertices)))
        es = set()
        for e in edges:
            u, v = tuple(e)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in vs or v not in vs:
                raise ValueError(f"edge ({u}, {v}) leaves the vertex set")
            es.add(frozenset((u, v)))
        return cls(vs, frozenset(es))

    def adjacent(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self.edges

    def neighbours(self, u: int) -> list[int]:
        return [v for v in self.vertices if v != u and self.adjacent(u, v)]

    def subgraph(self, subset: Iterable[int]) -> "SimpleGraph":
        s = set(subset)
        return SimpleGraph(
            tuple(v for v in self.vertices if v in s),
            frozenset(e for e in self.edges if e <= s),
        )

    def __len__(self) -> int:
        return len(self.vertices)


def dynkin_graph(A: BorcherdsCartanMatrix, subset: Iterable[int] | None = None) -> SimpleGraph:
    """Graph on ``subset`` with an edge wherever ``(alpha_i, alpha_j) != 0``."""
    vs = sorted(set(range(A.n) if subset is None else subset))
    edges = [
        (i, j) for k, i in enumerate(vs) for j in vs[k + 1:] if A.bilinear(i, j) != 0
    ]
    return SimpleGraph.from_edges(vs, edges)


def connected_components(G: SimpleGraph) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    out = []
    for start in G.vertices:
        if start in seen:
            continue
        stack, comp = [start], {start}
        while stack:
            u = stack.pop()
            for v in G.neighbours(u):
                if v not in comp:
                    comp.add(v)
                    stack.append(v)
        seen |= comp
        out.append(tuple(sorted(comp)))
    out.sort(key=lambda c: c[0])
    return out


def is_connected(G: SimpleGraph) -> bool:
    # the empty graph is treated as disconnected
    return len(connected_components(G)) == 1


def is_independent(G: SimpleGraph, subset: Iterable[int]) -> bool:
    s = list(subset)
    return not any(G.adjacent(u, v) for k, u in enumerate(s) for v in s[k + 1:])


def unordered_independent_partitions(G: SimpleGraph) -> dict[int, int]:
    """Count set partitions of the vertices into independent blocks, by block count.

    Backtracks over the vertices in order, placing each one into an existing
    block it has no neighbour in, or into a new block.
    """
    counts: dict[int, int] = {}
    vs = G.vertices
    blocks: list[list[int]] = []

    def place(pos: int) -> None:
        if pos == len(vs):
            counts[len(blocks)] = counts.get(len(blocks), 0) + 1
            return
        v = vs[pos]
        for block in blocks:
            if not any(G.adjacent(v, u) for u in block):
                block.append(v)
                place(pos + 1)
                block.pop()
        blocks.append([v])
        place(pos + 1)
        blocks.pop()

    if vs:
        place(0)
    return counts


def count_k_partitions(G: SimpleGraph, k: int) -> int:
    """Number of ordered k-partitions ``(J_1, ..., J_k)`` of ``G``."""
    if k < 1:
        raise ValueError("k must be positive")
    return factorial(k) * unordered_independent_partitions(G).get(k, 0)


def c_k_list(G: SimpleGraph) -> list[int]:
    """``[c_1(G), ..., c_n(G)]``."""
    unordered = unordered_independent_partitions(G)
    return [factorial(k) * unordered.get(k, 0) for k in range(1, len(G) + 1)]


def c_of_graph(G: SimpleGraph) -> int:
    """The alternating invariant ``(-1)^n sum_k (-1)^k c_k / k``.

    Positive exactly when ``G`` is connected. The empty graph gets 0.
    """
    n = len(G)
    if n == 0:
        return 0
    total = sum(Fraction((-1) ** k * ck, k) for k, ck in enumerate(c_k_list(G), start=1))
    value = (-1) ** n * total
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"c(G) = {value} is not a nonnegative integer")
    return int(value)
