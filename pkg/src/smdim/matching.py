"""Exact maximum matchings."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, is_bipartite


@dataclass(frozen=True)
class Matching:
    edges: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.edges)

    def mate(self) -> dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out

    def is_valid(self, g: Graph) -> bool:
        seen: set[int] = set()
        for u, v in self.edges:
            if not g.has_edge(u, v) or u in seen or v in seen:
                return False
            seen.update((u, v))
        return True


def _as_matching(mate: list[int]) -> Matching:
    return Matching(frozenset((u, v) for u, v in enumerate(mate) if v > u))


def bipartite_matching(g: Graph, color: list[int]) -> list[int]:
    """Augmenting-path maximum matching of a bipartite graph; returns the mate array."""
    mate = [-1] * g.n
    nbrs = [sorted(g.adj[u]) for u in range(g.n)]

    def augment(root: int) -> bool:
        # iterative DFS over alternating paths starting at a free left vertex
        visited = {root}
        stack = [(root, iter(nbrs[root]))]
        parent: dict[int, int] = {}
        while stack:
            u, it = stack[-1]
            for w in it:
                if w in visited:
                    continue
                visited.add(w)
                parent[w] = u
                if mate[w] == -1:
                    while True:
                        pu = parent[w]
                        nxt = mate[pu]
                        mate[pu], mate[w] = w, pu
                        if pu == root:
                            return True
                        w = nxt
                x = mate[w]
                visited.add(x)
                stack.append((x, iter(nbrs[x])))
                break
            else:
                stack.pop()
        return False

    for u in range(g.n):
        if color[u] == 0 and mate[u] == -1:
            augment(u)
    return mate


def blossom_matching(g: Graph) -> list[int]:
    """Edmonds' blossom algorithm for general graphs; returns the mate array."""
    n = g.n
    nbrs = [sorted(g.adj[u]) for u in range(n)]
    mate = [-1] * n

    def find_path(root: int) -> int:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while queue:
            v = queue.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark(v, cur, to, blossom)
                    mark(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return _flip(to, parent)
                    used[mate[to]] = True
                    queue.append(mate[to])
        return -1

    def _flip(v: int, parent: list[int]) -> int:
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v], mate[pv] = pv, v
            v = nxt
        return 0

    for root in range(n):
        if mate[root] == -1:
            find_path(root)
    return mate


def maximum_matching(g: Graph) -> Matching:
    """Exact maximum matching; deterministic for a fixed graph."""
    color = is_bipartite(g)
    mate = bipartite_matching(g, color) if color is not None else blossom_matching(g)
    return _as_matching(mate)


def matching_number(g: Graph) -> int:
    return maximum_matching(g).size


def has_perfect_matching(g: Graph) -> bool:
    return 2 * maximum_matching(g).size == g.n
