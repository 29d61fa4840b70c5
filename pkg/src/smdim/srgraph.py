"""Strong resolving graphs and the product identities they satisfy."""

from __future__ import annotations

from .errors import InvalidParameterError
from .families import complete
from .graph import Graph, cartesian_product, direct_product
from .metric import DistanceMatrix, all_pairs_distances, mmd_pairs


def strong_resolving_graph(g: Graph, dm: DistanceMatrix | None = None) -> Graph:
    """Graph on the boundary of ``g`` whose edges are the mutually maximally distant pairs.

    Boundary vertices keep their labels from ``g`` and appear in index order.
    """
    if dm is None:
        dm = all_pairs_distances(g)
    pairs = mmd_pairs(g, dm)
    verts = sorted({x for p in pairs for x in p})
    pos = {v: i for i, v in enumerate(verts)}
    return Graph([g.labels[v] for v in verts], [(pos[u], pos[v]) for u, v in pairs])


def sr_product_identity_check(g: Graph, h: Graph) -> bool:
    """``(g □ h)_SR`` equals ``g_SR × h_SR`` as labelled graphs (identity bijection)."""
    lhs = strong_resolving_graph(cartesian_product(g, h))
    rhs = direct_product(strong_resolving_graph(g), strong_resolving_graph(h))
    return set(lhs.labels) == set(rhs.labels) and lhs.label_edges() == rhs.label_edges()


def sr_direct_complete_identity_check(r: int, t: int) -> bool:
    """``(K_r × K_t)_SR`` equals ``K_r □ K_t`` as labelled graphs, for ``r, t >= 3``."""
    if r < 3 or t < 3:
        raise InvalidParameterError(f"need r, t >= 3, got r={r}, t={t}")
    kr, kt = complete(r), complete(t)
    lhs = strong_resolving_graph(direct_product(kr, kt))
    rhs = cartesian_product(kr, kt)
    return set(lhs.labels) == set(rhs.labels) and lhs.label_edges() == rhs.label_edges()
