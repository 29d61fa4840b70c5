"""Shortest-path structure: distances, intervals, strong resolution, boundary.

All distances are exact integer hop counts stored in a numpy ``int64`` matrix.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import DisconnectedGraphError
from .graph import Graph


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    d: np.ndarray

    @property
    def n(self) -> int:
        return self.d.shape[0]

    def __getitem__(self, key):
        return self.d[key]


def _bfs_row(g: Graph, s: int) -> list[int]:
    dist = [-1] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex. Raises :class:`DisconnectedGraphError` on disconnected input."""
    d = np.array([_bfs_row(g, s) for s in range(g.n)], dtype=np.int64).reshape(g.n, g.n)
    if (d < 0).any():
        raise DisconnectedGraphError()
    d.setflags(write=False)
    return DistanceMatrix(d)


def diameter(dm: DistanceMatrix) -> int:
    return int(dm.d.max()) if dm.n else 0


def in_interval(dm: DistanceMatrix, u: int, v: int, w: int) -> bool:
    """True iff ``v`` lies on some shortest ``u``-``w`` path."""
    d = dm.d
    return bool(d[u, w] == d[u, v] + d[v, w])


def strongly_resolves(dm: DistanceMatrix, w: int, u: int, v: int) -> bool:
    return in_interval(dm, u, v, w) or in_interval(dm, v, u, w)


def resolved_pairs(dm: DistanceMatrix, w: int) -> np.ndarray:
    """Boolean matrix ``R`` with ``R[u, v]`` set iff ``w`` strongly resolves ``u, v``."""
    d = dm.d
    dw = d[:, w]
    # v in I[u, w]: d(u, w) = d(u, v) + d(v, w)
    a = dw[:, None] == d + dw[None, :]
    return a | a.T


def is_maximally_distant(g: Graph, dm: DistanceMatrix, u: int, v: int) -> bool:
    """True iff no neighbour of ``u`` is farther from ``v`` than ``u`` is."""
    duv = dm.d[u, v]
    return all(dm.d[v, w] <= duv for w in g.adj[u])


def _max_distant_matrix(g: Graph, dm: DistanceMatrix) -> np.ndarray:
    """``M[u, v]`` is True iff ``u`` is maximally distant from ``v``."""
    d = dm.d
    n = g.n
    out = np.ones((n, n), dtype=bool)
    for u in range(n):
        nb = list(g.adj[u])
        if nb:
            out[u] = d[nb].max(axis=0) <= d[u]
    return out


def mmd_pairs(g: Graph, dm: DistanceMatrix | None = None) -> set[tuple[int, int]]:
    """Mutually maximally distant pairs as ``(u, v)`` with ``u < v``."""
    if dm is None:
        dm = all_pairs_distances(g)
    md = _max_distant_matrix(g, dm)
    both = md & md.T
    np.fill_diagonal(both, False)
    us, vs = np.nonzero(np.triu(both))
    return {(int(u), int(v)) for u, v in zip(us, vs)}


def boundary(g: Graph, dm: DistanceMatrix | None = None) -> list[int]:
    """Sorted indices of the boundary vertices."""
    return sorted({x for pair in mmd_pairs(g, dm) for x in pair})


def simplicial_vertices(g: Graph) -> list[int]:
    """Vertices whose open neighbourhood induces a clique (isolated vertices included)."""
    masks = g.masks
    out = []
    for u in range(g.n):
        nb = masks[u]
        if all((masks[w] | (1 << w)) & nb == nb for w in g.adj[u]):
            out.append(u)
    return out


def is_two_antipodal(g: Graph, dm: DistanceMatrix | None = None) -> bool:
    """Every vertex has exactly one vertex at diameter distance."""
    if dm is None:
        dm = all_pairs_distances(g)
    if g.n < 2:
        return False
    diam = diameter(dm)
    return bool(((dm.d == diam).sum(axis=1) == 1).all())


def is_distance_regular(g: Graph, dm: DistanceMatrix | None = None) -> bool:
    """Intersection numbers ``b_i`` and ``c_i`` depend only on the distance ``i``.

    Distance 0 is included, which forces regularity.
    """
    if dm is None:
        dm = all_pairs_distances(g)
    d = dm.d
    numbers: dict[int, tuple[int, int]] = {}
    for u in range(g.n):
        nb = list(g.adj[u])
        dn = d[nb]  # rows: neighbours w of u, columns: v
        for v in range(g.n):
            i = int(d[u, v])
            col = dn[:, v]
            key = (int((col == i - 1).sum()), int((col == i + 1).sum()))
            if numbers.setdefault(i, key) != key:
                return False
    return True
