"""Shared brute-force oracles and graph generators for the test suite.

The oracles here are deliberately naive (exhaustive over assignments,
injections, or permutations) so the fast implementations can be checked
against something whose correctness is obvious.
"""

import itertools

import pytest
from hypothesis import strategies as st

from p6c4.graphs import Graph


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    return Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def all_graphs(n: int):
    """Every labeled graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield graph_from_mask(n, mask)


def brute_k_color(g: Graph, k: int):
    """Exhaustive proper-coloring search; returns an assignment or None."""
    assignment = [0] * g.n

    def rec(v):
        if v == g.n:
            return True
        for color in range(k):
            if all(assignment[u] != color for u in g.neighbors(v) if u < v):
                assignment[v] = color
                if rec(v + 1):
                    return True
        return False

    return tuple(assignment) if rec(0) else None


def brute_induced_copy(g: Graph, pattern: Graph):
    """Injective-map enumeration; returns a vertex map or None."""
    for combo in itertools.combinations(range(g.n), pattern.n):
        for perm in itertools.permutations(combo):
            if all(
                g.has_edge(perm[a], perm[b]) == pattern.has_edge(a, b)
                for a, b in itertools.combinations(range(pattern.n), 2)
            ):
                return perm
    return None


def brute_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    return any(
        all(
            a.has_edge(u, v) == b.has_edge(perm[u], perm[v])
            for u, v in itertools.combinations(range(a.n), 2)
        )
        for perm in itertools.permutations(range(b.n))
    )


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    n_pairs = n * (n - 1) // 2
    mask = draw(st.integers(0, (1 << n_pairs) - 1)) if n_pairs else 0
    return graph_from_mask(n, mask)


@pytest.fixture(scope="session")
def small_free_family():
    """All connected (P6,C4)-free graphs with at most 6 vertices."""
    from p6c4 import enumeration, families

    cfg = enumeration.SearchConfig(
        n_max=6, forbidden=(families.path_graph(6), families.cycle_graph(4))
    )
    return list(enumeration.enumerate_family(cfg))
