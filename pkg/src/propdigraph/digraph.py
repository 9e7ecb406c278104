"""Finite simple digraphs, edge classification, and one-way-cycle analysis.

Vertices are always the integers 1..n.  An edge u -> v whose reverse
v -> u is also present is called *two-way*; otherwise it is *one-way*.
A digraph has a proportionality representation exactly when it has no
directed cycle made entirely of one-way edges, and in that case it can
be decomposed into an *appropriate pair* (S, T): the two-way edges as
unordered pairs plus the one-way edges relabeled so that every one-way
edge points from a smaller index to a larger one.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import OneWayCycleError


@dataclass(frozen=True)
class Digraph:
    """A simple digraph without self-loops on vertices 1..n."""

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        object.__setattr__(self, "edges", frozenset(self.edges))
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u}, {v}) out of range 1..{self.n}")

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def successors(self, u: int) -> list[int]:
        return sorted(v for (x, v) in self.edges if x == u)


def classify_edges(g: Digraph):
    """Split the edge set into two-way unordered pairs and one-way ordered pairs."""
    two_way = set()
    one_way = set()
    for u, v in g.edges:
        if (v, u) in g.edges:
            two_way.add(frozenset((u, v)))
        else:
            one_way.add((u, v))
    return two_way, one_way


def find_one_way_cycle(g: Digraph):
    """Return a directed cycle of one-way edges as [v1, ..., vk, v1], or None.

    Deterministic: depth-first search visiting vertices in ascending label
    order, so the same digraph always yields the same witness.
    """
    _, one_way = classify_edges(g)
    succ = {v: [] for v in range(1, g.n + 1)}
    for u, v in one_way:
        succ[u].append(v)
    for u in succ:
        succ[u].sort()

    WHITE, GRAY, BLACK = 0, 1, 2
    color = {v: WHITE for v in range(1, g.n + 1)}

    for root in range(1, g.n + 1):
        if color[root] != WHITE:
            continue
        # Iterative DFS; the explicit stack keeps the current path so the
        # witness cycle can be reconstructed when a gray vertex reappears.
        path = [root]
        iters = [iter(succ[root])]
        color[root] = GRAY
        while iters:
            advanced = False
            for v in iters[-1]:
                if color[v] == GRAY:
                    start = path.index(v)
                    return path[start:] + [v]
                if color[v] == WHITE:
                    color[v] = GRAY
                    path.append(v)
                    iters.append(iter(succ[v]))
                    advanced = True
                    break
            if not advanced:
                color[path.pop()] = BLACK
                iters.pop()
    return None


@dataclass(frozen=True)
class AppropriatePair:
    """Decomposition (S, T) of a digraph without one-way cycles.

    S holds the two-way edges as unordered pairs of relabeled vertices,
    T the one-way edges as ordered pairs (i, j) with i < j.  ``perm``
    maps each original vertex to its new label; ``perm[v - 1]`` is the
    label of original vertex v.
    """

    n: int
    S: frozenset[frozenset[int]]
    T: frozenset[tuple[int, int]]
    perm: tuple[int, ...]

    def relabel(self, v: int) -> int:
        return self.perm[v - 1]

    def original(self, i: int) -> int:
        return self.perm.index(i) + 1

    def to_digraph(self) -> Digraph:
        """The digraph G_{S,T} on the relabeled vertices."""
        edges = set()
        for pair in self.S:
            i, j = sorted(pair)
            edges.add((i, j))
            edges.add((j, i))
        edges.update(self.T)
        return Digraph(self.n, frozenset(edges))


def to_appropriate_pair(g: Digraph) -> AppropriatePair:
    """Decompose ``g`` into an appropriate pair, relabeling vertices.

    The relabeling is the lexicographically smallest topological order of
    the one-way-edge subgraph, so results are deterministic.  Raises
    OneWayCycleError (with witness) when no such order exists.
    """
    two_way, one_way = classify_edges(g)

    indegree = {v: 0 for v in range(1, g.n + 1)}
    succ = {v: [] for v in range(1, g.n + 1)}
    for u, v in one_way:
        indegree[v] += 1
        succ[u].append(v)

    heap = [v for v in range(1, g.n + 1) if indegree[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for v in succ[u]:
            indegree[v] -= 1
            if indegree[v] == 0:
                heapq.heappush(heap, v)
    if len(order) < g.n:
        cycle = find_one_way_cycle(g)
        raise OneWayCycleError(cycle)

    perm = [0] * g.n
    for pos, v in enumerate(order, start=1):
        perm[v - 1] = pos

    S = frozenset(frozenset(perm[v - 1] for v in pair) for pair in two_way)
    T = frozenset((perm[u - 1], perm[v - 1]) for (u, v) in one_way)
    return AppropriatePair(n=g.n, S=S, T=T, perm=tuple(perm))
