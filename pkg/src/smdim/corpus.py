"""Deterministic graph corpora for sweeps and tests."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations, product

from .families import (
    FamilySpec,
    make_family,
    parse_family_spec,
    tree_from_parents,
)
from .graph import Graph, is_connected
from .io import encode_graph6, parse_graph6

TREE_SHAPES = ("star", "broom", "caterpillar", "random")


def seeded_tree_parents(seed: int, max_n: int = 12) -> tuple[int, ...]:
    """Parent list of a tree on 2..max_n vertices; the shape cycles with ``seed % 4``."""
    rng = random.Random(seed)
    shape = TREE_SHAPES[seed % 4]
    n = rng.randint(3, max_n)
    if shape == "star":
        return tuple([0] * (n - 1))
    if shape == "broom":
        handle = rng.randint(1, n - 2)
        parents = list(range(handle))  # path 0-1-..-handle
        return tuple(parents + [handle] * (n - 1 - handle))
    if shape == "caterpillar":
        spine = rng.randint(2, max(2, n // 2))
        parents = list(range(spine - 1))
        parents += [rng.randrange(spine) for _ in range(n - spine)]
        return tuple(parents)
    return tuple(rng.randrange(i) for i in range(1, n))


def seeded_tree(seed: int, max_n: int = 12) -> Graph:
    return tree_from_parents(seeded_tree_parents(seed, max_n))


def random_connected_graph(rng: random.Random, n: int, p: float = 0.35) -> Graph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, sorted({tuple(sorted((perm[u], perm[v]))) for u, v in edges}))


def random_connected_graphs(count: int, n_min: int, n_max: int, seed: int = 0) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        out.append(random_connected_graph(rng, rng.randint(n_min, n_max), rng.uniform(0.1, 0.6)))
    return out


def canonical_graph6(g: Graph) -> str:
    """Lexicographically smallest graph6 over relabelings that order vertices by degree.

    Degree is an isomorphism invariant, so restricting to degree-sorted
    relabelings still yields a canonical form. Tiny graphs only.
    """
    classes: dict[int, list[int]] = {}
    for u in range(g.n):
        classes.setdefault(-g.degree(u), []).append(u)
    groups = [classes[k] for k in sorted(classes)]
    best = None
    for choice in product(*(permutations(c) for c in groups)):
        order = [u for block in choice for u in block]
        pos = {u: i for i, u in enumerate(order)}
        code = encode_graph6(Graph.from_edges(g.n, [(pos[u], pos[v]) for u, v in g.edges]))
        if best is None or code < best:
            best = code
    return best


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs on ``n`` vertices up to isomorphism (``n <= 7``).

    Every connected graph has a vertex whose removal leaves it connected, so
    extending each smaller graph by one vertex in all ways reaches every class.
    """
    if n < 1 or n > 7:
        raise ValueError("exhaustive enumeration is limited to 1 <= n <= 7")
    if n == 1:
        return (Graph.from_edges(1, []),)
    seen: dict[str, Graph] = {}
    for base in connected_graphs(n - 1):
        for k in range(1, n):
            for nbrs in combinations(range(n - 1), k):
                g = Graph.from_edges(n, list(base.edges) + [(u, n - 1) for u in nbrs])
                key = canonical_graph6(g)
                if key not in seen:
                    seen[key] = parse_graph6(key)
    return tuple(seen[k] for k in sorted(seen))


def resolve_graph(name: str) -> Graph:
    """Graph named either by the family grammar or as ``g6:<graph6>``."""
    if name.startswith("g6:"):
        return parse_graph6(name[3:])
    return make_family(parse_family_spec(name))


def family_corpus(max_order: int = 9) -> list[tuple[str, Graph]]:
    """Named family instances (including small products) with at most ``max_order`` vertices."""
    names = []
    names += [f"P:{n}" for n in range(2, 13)]
    names += [f"C:{n}" for n in range(3, 13)]
    names += [f"K:{n}" for n in range(2, 10)]
    names += [f"S:{k}" for k in range(2, 9)]
    names += [f"Kb:{r},{s}" for r in range(1, 6) for s in range(r, 8)]
    names += [f"CR:{n},{t}" for n in range(4, 13) for t in range(2, n // 2 + 1)]
    names += [f"Q:{k}" for k in range(1, 4)]
    names += [str(FamilySpec("tree_from_parent_list", seeded_tree_parents(s, 9))) for s in range(12)]
    small = ["P:2", "P:3", "P:4", "C:3", "C:4", "K:3", "K:4", "S:3"]
    for a in small:
        for b in small:
            names.append(f"B({a},{b})")
            names.append(f"X({a},{b})")
    out = []
    seen = set()
    for name in names:
        g = resolve_graph(name)
        if g.n <= max_order and g.n >= 2 and is_connected(g) and name not in seen:
            seen.add(name)
            out.append((name, g))
    return out
