"""Exact minimum vertex cover and independence number.

Bipartite components go through König's construction on a maximum matching.
Everything else is solved by branch and bound over integer bitsets: degree-0
and degree-1 reductions, splitting into components, a clique-cover lower
bound, and branching on a maximum-degree vertex (smallest index on ties).
Subproblems that turn bipartite are finished with König again.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, component_vertex_sets, is_bipartite
from .matching import Matching, bipartite_matching, maximum_matching


@dataclass(frozen=True)
class CoverWitness:
    vertices: frozenset[int]
    certificate_matching: Matching

    @property
    def size(self) -> int:
        return len(self.vertices)

    def covers(self, g: Graph) -> bool:
        return all(u in self.vertices or v in self.vertices for u, v in g.edges)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


class _CoverSolver:
    def __init__(self, masks: tuple[int, ...]):
        self.masks = masks
        self.nodes = 0

    def components(self, alive: int) -> list[int]:
        masks = self.masks
        comps = []
        rest = alive
        while rest:
            low = rest & -rest
            comp = frontier = low
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= masks[v]
                nxt &= alive & ~comp
                comp |= nxt
                frontier = nxt
            comps.append(comp)
            rest &= ~comp
        return comps

    def clique_cover_bound(self, alive: int) -> int:
        """``|alive|`` minus the number of cliques in a greedy clique partition."""
        masks = self.masks
        rest = alive
        cliques = 0
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= ~(1 << v)
            cand = masks[v] & rest
            while cand:
                w = (cand & -cand).bit_length() - 1
                rest &= ~(1 << w)
                cand &= masks[w]
            cliques += 1
        return _popcount(alive) - cliques

    def bipartite_cover(self, alive: int) -> int | None:
        """Exact cover mask of ``G[alive]`` when it is bipartite, else ``None``."""
        masks = self.masks
        verts = list(_bits(alive))
        pos = {v: i for i, v in enumerate(verts)}
        sub = Graph.from_edges(
            len(verts),
            [(pos[u], pos[w]) for u in verts for w in _bits(masks[u] & alive) if u < w],
        )
        color = is_bipartite(sub)
        if color is None:
            return None
        cover = konig_cover(sub, color)
        return sum(1 << verts[i] for i in cover)

    def solve(self, alive: int, limit: int) -> int | None:
        """Minimum cover of ``G[alive]`` of size ``< limit``, or ``None`` if none exists."""
        self.nodes += 1
        masks = self.masks
        forced = 0
        changed = True
        while changed:
            changed = False
            for v in _bits(alive):
                if not (alive >> v) & 1:
                    continue
                nb = masks[v] & alive
                if nb == 0:
                    alive &= ~(1 << v)
                elif nb & (nb - 1) == 0:
                    forced |= nb
                    alive &= ~(nb | (1 << v))
                    changed = True
        k = _popcount(forced)
        if k >= limit:
            return None
        if alive == 0:
            return forced
        budget = limit - k
        comps = self.components(alive)
        if len(comps) > 1:
            bounds = [self.clique_cover_bound(c) for c in comps]
            if sum(bounds) >= budget:
                return None
            total = forced
            used = 0
            rest_lb = sum(bounds)
            for comp, lb in sorted(zip(comps, bounds), key=lambda t: _popcount(t[0])):
                rest_lb -= lb
                sub = self.solve(comp, budget - used - rest_lb)
                if sub is None:
                    return None
                used += _popcount(sub)
                total |= sub
            return total
        if self.clique_cover_bound(alive) >= budget:
            return None
        bip = self.bipartite_cover(alive)
        if bip is not None:
            return forced | bip if _popcount(bip) < budget else None

        best = None
        v = max(_bits(alive), key=lambda x: (_popcount(masks[x] & alive), -x))
        nb = masks[v] & alive
        take_v = self.solve(alive & ~(1 << v), budget - 1)
        if take_v is not None:
            best = take_v | (1 << v)
            budget = _popcount(best)
        d = _popcount(nb)
        if d < budget:
            take_nb = self.solve(alive & ~(nb | (1 << v)), budget - d)
            if take_nb is not None:
                best = take_nb | nb
        return None if best is None else forced | best


def konig_cover(g: Graph, color: list[int]) -> list[int]:
    """Minimum vertex cover of a bipartite graph from a maximum matching (König)."""
    mate = bipartite_matching(g, color)
    # Z: reachable from free side-0 vertices along alternating paths
    reach = [False] * g.n
    stack = [u for u in range(g.n) if color[u] == 0 and mate[u] == -1]
    for u in stack:
        reach[u] = True
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if not reach[w] and mate[u] != w:
                reach[w] = True
                x = mate[w]
                if x != -1 and not reach[x]:
                    reach[x] = True
                    stack.append(x)
    return [u for u in range(g.n) if (color[u] == 0) != reach[u]]


def _greedy_cover(g: Graph, verts: list[int]) -> int:
    masks = g.masks
    alive = sum(1 << v for v in verts)
    cover = 0
    while True:
        best, deg = -1, 0
        for v in _bits(alive):
            dv = _popcount(masks[v] & alive)
            if dv > deg:
                best, deg = v, dv
        if deg == 0:
            return cover
        cover |= 1 << best
        alive &= ~(1 << best)


def _component_cover(g: Graph, comp: list[int]) -> list[int]:
    if len(comp) == 1:
        return []
    sub = g.induced_subgraph(comp)
    color = is_bipartite(sub)
    if color is not None:
        return [comp[i] for i in konig_cover(sub, color)]
    solver = _CoverSolver(g.masks)
    upper = _greedy_cover(g, comp)
    alive = sum(1 << v for v in comp)
    found = solver.solve(alive, _popcount(upper))
    return sorted(_bits(upper if found is None else found))


def vertex_cover_number(g: Graph) -> CoverWitness:
    """Exact minimum vertex cover with a maximum matching as lower-bound certificate."""
    cover: list[int] = []
    for comp in component_vertex_sets(g):
        cover.extend(_component_cover(g, comp))
    return CoverWitness(frozenset(cover), maximum_matching(g))


def independence_number(g: Graph) -> int:
    """``|V| - alpha(G)`` (Gallai)."""
    return g.n - vertex_cover_number(g).size


def maximum_independent_set(g: Graph) -> frozenset[int]:
    return frozenset(range(g.n)) - vertex_cover_number(g).vertices
