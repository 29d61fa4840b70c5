"""Strong metric dimension: exact reduction, brute-force oracle, and bounds."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .cover import vertex_cover_number
from .errors import DisconnectedGraphError, TooLargeError, TrivialGraphError
from .families import complete
from .graph import Graph, Label, cartesian_product, is_connected
from .matching import matching_number
from .metric import (
    DistanceMatrix,
    all_pairs_distances,
    boundary,
    resolved_pairs,
    simplicial_vertices,
)
from .srgraph import strong_resolving_graph

ORACLE_LIMIT = 10


@dataclass(frozen=True)
class SdimResult:
    value: int
    basis: frozenset[Label]
    indices: tuple[int, ...]
    method: str  # "sr_reduction" or "oracle"


@dataclass(frozen=True)
class BoundsResult:
    lower: int
    upper: int

    def __contains__(self, value: int) -> bool:
        return self.lower <= value <= self.upper


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError()


def _require_nontrivial(g: Graph) -> None:
    _require_connected(g)
    if g.n < 2:
        raise TrivialGraphError()


def is_strong_resolving_set(
    g: Graph, s: Iterable[int], dm: DistanceMatrix | None = None
) -> bool:
    """Every unordered pair of vertices is strongly resolved by some member of ``s``."""
    _require_connected(g)
    if dm is None:
        dm = all_pairs_distances(g)
    done = np.eye(g.n, dtype=bool)
    for w in s:
        done |= resolved_pairs(dm, w)
    return bool(done.all())


def strong_metric_dimension(g: Graph) -> SdimResult:
    """``dim_s(g)`` as the vertex cover number of the strong resolving graph.

    The cover is re-checked as a strong resolving set of ``g`` before returning.
    """
    _require_nontrivial(g)
    dm = all_pairs_distances(g)
    sr = strong_resolving_graph(g, dm)
    cover = vertex_cover_number(sr)
    idx = tuple(sorted(g.index(sr.labels[i]) for i in cover.vertices))
    if not is_strong_resolving_set(g, idx, dm):
        raise RuntimeError("vertex cover of the strong resolving graph failed to resolve g")
    return SdimResult(len(idx), frozenset(g.labels[i] for i in idx), idx, "sr_reduction")


def sdim_oracle(g: Graph, limit: int = ORACLE_LIMIT) -> SdimResult:
    """Brute force: the lexicographically first smallest strong resolving set."""
    _require_nontrivial(g)
    if g.n > limit:
        raise TooLargeError("sdim_oracle", g.n, limit)
    dm = all_pairs_distances(g)
    iu = np.triu_indices(g.n, 1)
    pair_masks = []
    for w in range(g.n):
        hit = resolved_pairs(dm, w)[iu]
        pair_masks.append(sum(1 << k for k in np.flatnonzero(hit).tolist()))
    full = (1 << len(iu[0])) - 1
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            acc = 0
            for w in combo:
                acc |= pair_masks[w]
            if acc == full:
                return SdimResult(k, frozenset(g.labels[i] for i in combo), combo, "oracle")
    raise AssertionError("the whole vertex set always strongly resolves")


def sdim_bounds(g: Graph) -> BoundsResult:
    """``max(|simplicial| - 1, 0) <= dim_s <= |boundary| - 1``."""
    _require_nontrivial(g)
    return BoundsResult(max(len(simplicial_vertices(g)) - 1, 0), len(boundary(g)) - 1)


def product_sdim_bounds(g: Graph, h: Graph) -> BoundsResult:
    """Bounds on ``dim_s(g □ h)`` from exact invariants of the factors.

    lower: max of ``dim_s(g)dim_s(h)``, ``mu(h_SR) dim_s(g □ K2)`` and
    ``2 mu(g_SR) mu(h_SR)``; upper: ``min(dim_s(g)|∂h|, |∂g|dim_s(h))``.
    """
    _require_nontrivial(g)
    _require_nontrivial(h)
    sg = strong_metric_dimension(g).value
    sh = strong_metric_dimension(h).value
    g_sr = strong_resolving_graph(g)
    h_sr = strong_resolving_graph(h)
    mu_g, mu_h = matching_number(g_sr), matching_number(h_sr)
    with_k2 = strong_metric_dimension(cartesian_product(g, complete(2))).value
    lower = max(sg * sh, mu_h * with_k2, 2 * mu_g * mu_h)
    upper = min(sg * h_sr.n, g_sr.n * sh)
    return BoundsResult(lower, upper)
