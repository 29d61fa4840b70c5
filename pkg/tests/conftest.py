"""Shared independent oracles and strategies.

Nothing here goes through the package's solvers: brute force over subsets,
scipy's shortest paths and MILP, networkx's graph6 writer and isomorphism
matcher.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx
import numpy as np
import pytest
from hypothesis import strategies as st
from scipy.optimize import Bounds, LinearConstraint, milp
from scipy.sparse.csgraph import shortest_path

from smdim.corpus import family_corpus, random_connected_graphs
from smdim.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def scipy_distances(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    return shortest_path(a, unweighted=True, directed=False)


def brute_independence(g: Graph) -> int:
    """Largest independent set by exhaustive search with bitsets."""
    masks = [sum(1 << w for w in g.adj[u]) for u in range(g.n)]
    best = 0

    def grow(cand: int, size: int) -> None:
        nonlocal best
        if size + bin(cand).count("1") <= best:
            return
        if not cand:
            best = max(best, size)
            return
        v = (cand & -cand).bit_length() - 1
        grow(cand & ~(1 << v) & ~masks[v], size + 1)
        grow(cand & ~(1 << v), size)

    grow((1 << g.n) - 1, 0)
    return best


def brute_matching(g: Graph) -> int:
    edges = list(g.edges)
    best = 0

    def go(i: int, used: int, size: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + (len(edges) - i) <= best:
            return
        for j in range(i, len(edges)):
            u, v = edges[j]
            if not (used >> u) & 1 and not (used >> v) & 1:
                go(j + 1, used | (1 << u) | (1 << v), size + 1)

    go(0, 0, 0)
    return best


def _pair_rows(g: Graph) -> np.ndarray:
    d = scipy_distances(g).astype(int)
    rows = []
    for u, v in combinations(range(g.n), 2):
        rows.append(
            [d[u, w] == d[u, v] + d[v, w] or d[v, w] == d[v, u] + d[u, w] for w in range(g.n)]
        )
    return np.array(rows, dtype=float)


def brute_sdim(g: Graph) -> int:
    """Smallest strong resolving set straight from the definition."""
    rows = _pair_rows(g).astype(bool)
    for k in range(1, g.n + 1):
        for s in combinations(range(g.n), k):
            if rows[:, list(s)].any(axis=1).all():
                return k
    raise AssertionError


def ilp_sdim(g: Graph) -> int:
    """Strong metric dimension as a set-cover MILP over vertex pairs."""
    a = _pair_rows(g)
    res = milp(
        np.ones(g.n),
        constraints=LinearConstraint(a, lb=1),
        integrality=np.ones(g.n),
        bounds=Bounds(0, 1),
    )
    assert res.success
    return int(round(res.fun))


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    edges = {(p, i) for i, p in enumerate(parents, start=1)}
    pairs = list(combinations(range(n), 2))
    edges |= set(draw(st.lists(st.sampled_from(pairs), unique=True, max_size=2 * n)))
    return Graph.from_edges(n, sorted(edges))


@pytest.fixture(scope="session")
def corpus() -> list[tuple[str, Graph]]:
    """Family instances up to 9 vertices plus 200 seeded random graphs on 5-8 vertices."""
    named = family_corpus(9)
    rand = [(f"rand{i}", g) for i, g in enumerate(random_connected_graphs(200, 5, 8, seed=2024))]
    return named + rand
