"""Desk-scale exact predicates: Hamiltonicity and vertex-transitivity."""

from __future__ import annotations

from collections import deque

from .errors import TooLargeError
from .graph import Graph, is_connected

HAMILTONIAN_LIMIT = 16
TRANSITIVE_LIMIT = 12


def is_hamiltonian(g: Graph, limit: int = HAMILTONIAN_LIMIT) -> bool:
    """Backtracking search for a Hamiltonian cycle. ``K_1`` and ``K_2`` have none."""
    n = g.n
    if n > limit:
        raise TooLargeError("is_hamiltonian", n, limit)
    if n < 3 or not is_connected(g) or min(g.degree(u) for u in range(n)) < 2:
        return False
    masks = g.masks
    full = (1 << n) - 1

    def extend(v: int, visited: int) -> bool:
        if visited == full:
            return bool(masks[v] & 1)
        free = ~visited & full
        # every unvisited vertex still needs two usable neighbours (path end or start count)
        for w in _iter_bits(free):
            usable = masks[w] & (free | 1 | (1 << v))
            if usable & (usable - 1) == 0:
                return False
        for w in _iter_bits(masks[v] & free):
            if extend(w, visited | (1 << w)):
                return True
        return False

    return extend(0, 1)


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _distances(g: Graph) -> list[list[int]]:
    inf = g.n + 1
    rows = []
    for s in range(g.n):
        dist = [inf] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        rows.append(dist)
    return rows


def _find_automorphism(g: Graph, dist: list[list[int]], profile: list, src: int, dst: int) -> dict[int, int] | None:
    n = g.n
    order = sorted(range(n), key=lambda x: (dist[src][x], x))
    image: dict[int, int] = {}
    used = [False] * n

    def place(i: int) -> bool:
        if i == n:
            return True
        x = order[i]
        for y in range(n):
            if used[y] or profile[y] != profile[x] or dist[dst][y] != dist[src][x]:
                continue
            if any((y in g.adj[image[z]]) != (x in g.adj[z]) for z in image):
                continue
            image[x] = y
            used[y] = True
            if place(i + 1):
                return True
            del image[x]
            used[y] = False
        return False

    image[src] = dst
    used[dst] = True
    return dict(image) if place(1) else None


def is_vertex_transitive(g: Graph, limit: int = TRANSITIVE_LIMIT) -> bool:
    """True iff the automorphism group acts transitively on the vertices.

    Searches an automorphism sending vertex 0 to each other vertex, pruning
    candidates by degree and distance profile. Reaching every vertex from 0
    is equivalent to transitivity because automorphisms form a group.
    """
    n = g.n
    if n > limit:
        raise TooLargeError("is_vertex_transitive", n, limit)
    if n <= 1:
        return True
    dist = _distances(g)
    profile = [sorted(row) for row in dist]
    if any(p != profile[0] for p in profile):
        return False
    return all(
        _find_automorphism(g, dist, profile, 0, v) is not None for v in range(1, n)
    )
