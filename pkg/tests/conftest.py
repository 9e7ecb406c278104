"""Shared fixtures and brute-force oracles."""

import itertools

import pytest

from propdigraph import Digraph

# The running example: 1 <-> 2 <-> 3 plus one-way edges 1->3, 3->4, 2->4.
RUNNING_EXAMPLE = Digraph(
    4, frozenset({(1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 4), (2, 4)})
)


def all_digraphs(n):
    """Every labeled simple digraph on vertices 1..n (2^(n(n-1)) of them)."""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]
    for bits in range(1 << len(pairs)):
        yield Digraph(n, frozenset(p for k, p in enumerate(pairs) if bits >> k & 1))


def representable_digraphs(n):
    from propdigraph import find_one_way_cycle

    for g in all_digraphs(n):
        if find_one_way_cycle(g) is None:
            yield g


def brute_force_has_one_way_cycle(g):
    """Enumerate every simple directed cycle; ask if one is all one-way edges."""
    one_way = {
        (u, v) for (u, v) in g.edges if (v, u) not in g.edges
    }
    vertices = range(1, g.n + 1)
    for k in range(2, g.n + 1):
        for seq in itertools.permutations(vertices, k):
            edges = list(zip(seq, seq[1:])) + [(seq[-1], seq[0])]
            if all(e in one_way for e in edges):
                return True
    return False


@pytest.fixture
def running_example():
    return RUNNING_EXAMPLE
