"""Immutable simple graphs, Cartesian and direct products, structure predicates.

Vertices are addressed by index ``0..n-1``; every vertex also carries a label.
Atom labels are plain ``int``; product vertices carry a ``(left, right)`` tuple
of the factor labels, nested for products of products.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence, Tuple, Union

Label = Union[int, Tuple["Label", "Label"]]
Edge = Tuple[int, int]


class Graph:
    """Simple undirected graph with stable vertex labels.

    Instances are never mutated after construction.
    """

    __slots__ = ("_labels", "_adj", "_index", "_masks", "_edges")

    def __init__(self, labels: Sequence[Label], edges: Iterable[Edge]):
        labels = tuple(labels)
        n = len(labels)
        index = {}
        for i, lab in enumerate(labels):
            if lab in index:
                raise ValueError(f"duplicate vertex label {lab!r}")
            index[lab] = i
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._labels = labels
        self._adj = tuple(frozenset(s) for s in nbrs)
        self._index = index
        self._masks: tuple[int, ...] | None = None
        self._edges: tuple[Edge, ...] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        """Graph on atoms ``0..n-1``."""
        return cls(range(n), edges)

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def labels(self) -> tuple[Label, ...]:
        return self._labels

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        return self._adj

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Sorted ``(u, v)`` index pairs with ``u < v``."""
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v
            )
        return self._edges

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitsets (bit ``v`` set when ``v`` is adjacent)."""
        if self._masks is None:
            self._masks = tuple(sum(1 << v for v in nb) for nb in self._adj)
        return self._masks

    def neighbors(self, u: int) -> frozenset[int]:
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def index(self, label: Label) -> int:
        return self._index[label]

    def label(self, u: int) -> Label:
        return self._labels[u]

    def label_edges(self) -> frozenset[frozenset[Label]]:
        """Edge set expressed through labels, for label-exact comparisons."""
        lab = self._labels
        return frozenset(frozenset((lab[u], lab[v])) for u, v in self.edges)

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on ``vertices`` (kept in increasing index order, labels retained)."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        edges = [
            (pos[u], pos[v]) for u in keep for v in self._adj[u] if v in pos and u < v
        ]
        return Graph([self._labels[v] for v in keep], edges)

    def relabeled(self) -> "Graph":
        """Same graph with atom labels ``0..n-1``."""
        return Graph.from_edges(self.n, self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._labels == other._labels and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self._labels, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """``g □ h``: vertex ``(a, b)`` sits at index ``ia * h.n + ib``."""
    if g.n == 0 or h.n == 0:
        raise ValueError("product factors must be non-empty")
    nh = h.n
    labels = [(a, b) for a in g.labels for b in h.labels]
    edges = []
    for i in range(g.n):
        for u, v in h.edges:
            edges.append((i * nh + u, i * nh + v))
    for u, v in g.edges:
        for j in range(nh):
            edges.append((u * nh + j, v * nh + j))
    return Graph(labels, edges)


def direct_product(g: Graph, h: Graph) -> Graph:
    """``g × h``; the result may be disconnected."""
    if g.n == 0 or h.n == 0:
        raise ValueError("product factors must be non-empty")
    nh = h.n
    labels = [(a, b) for a in g.labels for b in h.labels]
    edges = []
    for a, c in g.edges:
        for b, d in h.edges:
            edges.append((a * nh + b, c * nh + d))
            edges.append((a * nh + d, c * nh + b))
    return Graph(labels, edges)


def _bfs_order(g: Graph, source: int, seen: list[bool]) -> list[int]:
    seen[source] = True
    order = [source]
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if not seen[w]:
                seen[w] = True
                order.append(w)
                queue.append(w)
    return order


def is_connected(g: Graph) -> bool:
    """True when one BFS reaches every vertex; the empty graph counts as connected."""
    if g.n == 0:
        return True
    return len(_bfs_order(g, 0, [False] * g.n)) == g.n


def component_vertex_sets(g: Graph) -> list[list[int]]:
    """Vertex index lists of the components, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if not seen[s]:
            comps.append(sorted(_bfs_order(g, s, seen)))
    return comps


def connected_components(g: Graph) -> list[Graph]:
    """Components as induced subgraphs carrying the original labels."""
    return [g.induced_subgraph(c) for c in component_vertex_sets(g)]


def is_bipartite(g: Graph) -> list[int] | None:
    """Two-colouring as a list of 0/1 sides, or ``None`` if an odd cycle exists.

    The lowest-index vertex of every component is put on side 0.
    """
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_regular(g: Graph) -> bool:
    return len({g.degree(u) for u in range(g.n)}) <= 1


def swap_labels(g: Graph) -> Graph:
    """Swap every top-level pair label ``(a, b)`` to ``(b, a)``."""
    return Graph([(lab[1], lab[0]) for lab in g.labels], g.edges)
