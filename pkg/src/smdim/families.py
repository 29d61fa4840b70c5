"""Named graph families and the compact textual spec grammar.

Grammar accepted by :func:`parse_family_spec`::

    P:n  C:n  K:n  Kb:r,s  CR:n,t  Q:k  S:k  T:p1,p2,...
    B(A,B)   Cartesian product
    X(A,B)   direct product

``T`` takes the parent of each vertex ``1..n-1`` (vertex 0 is the root), so
``T:0,0,1`` is the path ``2-0-1-3`` on four vertices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce

from .errors import InvalidParameterError
from .graph import Graph, cartesian_product, direct_product, is_connected

KINDS = (
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "circulant",
    "hypercube",
    "star",
    "tree_from_parent_list",
    "cartesian",
    "direct",
)

_SHORT = {
    "P": "path",
    "C": "cycle",
    "K": "complete",
    "Kb": "complete_bipartite",
    "CR": "circulant",
    "Q": "hypercube",
    "S": "star",
    "T": "tree_from_parent_list",
}
_SHORT_OF = {v: k for k, v in _SHORT.items()}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()
    children: tuple["FamilySpec", "FamilySpec"] | None = None

    def __str__(self) -> str:
        if self.kind in ("cartesian", "direct"):
            op = "B" if self.kind == "cartesian" else "X"
            return f"{op}({self.children[0]},{self.children[1]})"
        return f"{_SHORT_OF[self.kind]}:{','.join(map(str, self.params))}"


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(r: int, s: int) -> Graph:
    if r < 1 or s < 1:
        raise InvalidParameterError(f"complete bipartite needs r, s >= 1, got {r}, {s}")
    return Graph.from_edges(r + s, [(i, r + j) for i in range(r) for j in range(s)])


def circulant(n: int, t: int) -> Graph:
    """``CR(n, t)``: ``i ~ j`` iff their cyclic distance is in ``1..t``."""
    if n < 2 or not 0 < t <= n // 2:
        raise InvalidParameterError(f"circulant needs 0 < t <= n//2, got n={n}, t={t}")
    edges = {tuple(sorted((i, (i + s) % n))) for i in range(n) for s in range(1, t + 1)}
    return Graph.from_edges(n, sorted(edges))


def hypercube(k: int) -> Graph:
    if k < 1:
        raise InvalidParameterError(f"hypercube needs k >= 1, got {k}")
    n = 1 << k
    return Graph.from_edges(
        n, [(u, u ^ (1 << b)) for u in range(n) for b in range(k) if u < u ^ (1 << b)]
    )


def star(k: int) -> Graph:
    """``K_{1,k}`` with the centre at index 0."""
    if k < 1:
        raise InvalidParameterError(f"star needs k >= 1 leaves, got {k}")
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def tree_from_parents(parents: tuple[int, ...] | list[int]) -> Graph:
    n = len(parents) + 1
    edges = []
    for child, p in enumerate(parents, start=1):
        if not 0 <= p < n or p == child:
            raise InvalidParameterError(f"bad parent {p} for vertex {child}")
        edges.append((p, child))
    g = Graph.from_edges(n, edges)
    if g.m != n - 1 or not is_connected(g):
        raise InvalidParameterError("parent list does not describe a tree")
    return g


def hamming(k: int, n: int) -> Graph:
    """``H_{k,n}``, the k-fold Cartesian power of ``K_n`` built by left fold."""
    if k < 1:
        raise InvalidParameterError(f"Hamming graph needs k >= 1, got {k}")
    return multi_complete_cartesian([n] * k)


def multi_complete_cartesian(orders: list[int] | tuple[int, ...]) -> Graph:
    return reduce(cartesian_product, [complete(n) for n in orders])


def multi_complete_direct(orders: list[int] | tuple[int, ...]) -> Graph:
    return reduce(direct_product, [complete(n) for n in orders])


def leaf_count(g: Graph) -> int:
    return sum(1 for u in range(g.n) if g.degree(u) == 1)


def make_family(spec: FamilySpec) -> Graph:
    """Materialise a family instance; equal specs give equal graphs."""
    k, p = spec.kind, spec.params
    if k in ("cartesian", "direct"):
        if spec.children is None:
            raise InvalidParameterError(f"{k} spec needs two children")
        a, b = (make_family(c) for c in spec.children)
        return cartesian_product(a, b) if k == "cartesian" else direct_product(a, b)
    if k == "tree_from_parent_list":
        return tree_from_parents(p)
    arity = {"complete_bipartite": 2, "circulant": 2}.get(k, 1)
    if k not in KINDS:
        raise InvalidParameterError(f"unknown family kind {k!r}")
    if len(p) != arity:
        raise InvalidParameterError(f"{k} takes {arity} parameter(s), got {len(p)}")
    builder = {
        "path": path,
        "cycle": cycle,
        "complete": complete,
        "complete_bipartite": complete_bipartite,
        "circulant": circulant,
        "hypercube": hypercube,
        "star": star,
    }[k]
    return builder(*p)


_ATOM = re.compile(r"([A-Za-z]+):(-?\d+(?:,-?\d+)*)?")


def parse_family_spec(text: str) -> FamilySpec:
    """Parse the compact grammar (see module docstring) into a :class:`FamilySpec`."""
    spec, rest = _parse(text.replace(" ", ""), 0)
    if rest != len(text.replace(" ", "")):
        raise InvalidParameterError(f"trailing characters in family spec {text!r}")
    return spec


def _parse(s: str, i: int) -> tuple[FamilySpec, int]:
    for op, kind in (("B(", "cartesian"), ("X(", "direct")):
        if s.startswith(op, i):
            left, j = _parse(s, i + 2)
            if j >= len(s) or s[j] != ",":
                raise InvalidParameterError(f"expected ',' at position {j} in {s!r}")
            right, j = _parse(s, j + 1)
            if j >= len(s) or s[j] != ")":
                raise InvalidParameterError(f"expected ')' at position {j} in {s!r}")
            return FamilySpec(kind, (), (left, right)), j + 1
    m = _ATOM.match(s, i)
    if m is None or m.group(1) not in _SHORT:
        raise InvalidParameterError(f"cannot parse family spec at position {i} in {s!r}")
    params = tuple(int(x) for x in m.group(2).split(",")) if m.group(2) else ()
    # an atom's parameter list stops before a ',' that belongs to an enclosing product
    end = m.end()
    kind = _SHORT[m.group(1)]
    if kind != "tree_from_parent_list":
        arity = 2 if kind in ("complete_bipartite", "circulant") else 1
        if len(params) > arity:
            params = params[:arity]
            end = m.start(2) + len(",".join(m.group(2).split(",")[:arity]))
    return FamilySpec(kind, params), end
