from itertools import combinations_with_replacement, permutations
from math import prod

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import brute_independence, brute_matching, graphs, to_nx
from smdim.corpus import connected_graphs, random_connected_graphs
from smdim.cover import (
    independence_number,
    maximum_independent_set,
    vertex_cover_number,
)
from smdim.errors import TooLargeError
from smdim.families import (
    circulant,
    complete,
    complete_bipartite,
    cycle,
    hypercube,
    multi_complete_direct,
    path,
    star,
)
from smdim.graph import Graph, cartesian_product, direct_product, is_bipartite
from smdim.matching import (
    blossom_matching,
    has_perfect_matching,
    matching_number,
    maximum_matching,
)
from smdim.structure import is_hamiltonian, is_vertex_transitive

FACTOR_PAIRS = [
    (path(3), path(4)), (cycle(5), complete(3)), (cycle(4), cycle(6)), (complete(3), complete(4)),
    (star(3), cycle(5)), (complete_bipartite(2, 3), path(3)), (cycle(5), cycle(3)),
    (hypercube(3), complete(3)), (circulant(7, 2), path(2)), (star(4), star(3)),
]


class TestMatching:
    def test_examples(self):
        assert matching_number(cycle(5)) == 2
        assert matching_number(cycle(6)) == 3
        assert matching_number(complete(4)) == 2

    def test_perfect(self):
        assert has_perfect_matching(cycle(6))
        assert not has_perfect_matching(cycle(5))
        assert has_perfect_matching(complete_bipartite(3, 3))
        assert not has_perfect_matching(star(3))

    def test_petersen_blossom(self):
        g = Graph.from_edges(10, list(nx.petersen_graph().edges()))
        assert matching_number(g) == 5

    def test_deterministic(self):
        g = circulant(11, 3)
        assert maximum_matching(g) == maximum_matching(g)

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=10))
    def test_against_brute_force(self, g):
        m = maximum_matching(g)
        assert m.is_valid(g)
        assert m.size == brute_matching(g)

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=14))
    def test_blossom_against_networkx(self, g):
        mate = blossom_matching(g)
        assert all(mate[mate[u]] == u for u in range(g.n) if mate[u] != -1)
        assert sum(v > u for u, v in enumerate(mate)) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))


class TestCover:
    def test_examples(self):
        assert all(vertex_cover_number(complete(n)).size == n - 1 for n in range(1, 8))
        assert vertex_cover_number(cycle(7)).size == 4
        assert vertex_cover_number(Graph.from_edges(0, [])).size == 0
        assert vertex_cover_number(cartesian_product(complete(3), complete(3))).size == 6

    def test_independence_examples(self):
        assert independence_number(circulant(7, 2)) == 2
        assert independence_number(cycle(6)) == 3
        assert independence_number(complete(5)) == 1

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_n=14))
    def test_gallai_against_brute_force(self, g):
        w = vertex_cover_number(g)
        assert w.covers(g)
        assert w.size + brute_independence(g) == g.n
        mis = maximum_independent_set(g)
        assert len(mis) == independence_number(g)
        assert not any(g.has_edge(u, v) for u in mis for v in mis if u < v)

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=12))
    def test_certificate(self, g):
        w = vertex_cover_number(g)
        assert w.certificate_matching.is_valid(g)
        assert w.certificate_matching.size <= w.size
        if is_bipartite(g) is not None:
            assert w.certificate_matching.size == w.size

    def test_konig_on_corpus(self, corpus):
        seen = 0
        for _, g in corpus:
            if is_bipartite(g) is not None:
                seen += 1
                assert vertex_cover_number(g).size == maximum_matching(g).size
        assert seen > 30

    def test_larger_instances(self):
        # C9 □ C9 has 81 vertices and independence number 36
        assert independence_number(cartesian_product(cycle(9), cycle(9))) == 36
        assert independence_number(circulant(16, 2)) == 5

    @pytest.mark.parametrize("g", random_connected_graphs(25, 15, 22, seed=99))
    def test_medium_random_against_networkx_complement_clique(self, g):
        comp = nx.complement(to_nx(g))
        clique = max(len(c) for c in nx.find_cliques(comp))
        assert independence_number(g) == clique


class TestDirectProductLaws:
    @pytest.mark.parametrize("g, h", FACTOR_PAIRS)
    def test_cover_chain(self, g, h):
        gh = vertex_cover_number(direct_product(g, h)).size
        gk2 = direct_product(g, complete(2))
        mu_h = matching_number(h)
        assert vertex_cover_number(gk2).size == matching_number(gk2)
        assert gh >= mu_h * vertex_cover_number(gk2).size >= 2 * matching_number(g) * mu_h

    @pytest.mark.parametrize("g, h", FACTOR_PAIRS)
    def test_independence_sandwich(self, g, h):
        b, bg, bh = independence_number(direct_product(g, h)), independence_number(g), independence_number(h)
        n1, n2 = g.n, h.n
        assert max(n2 * bg, n1 * bh) <= b <= n2 * bg + n1 * bh - bg * bh

    @pytest.mark.parametrize(
        "g, h",
        [(a, b) for a in (cycle(4), cycle(5), cycle(6), complete(3), complete(4), hypercube(3))
         for b in (cycle(3), cycle(5), cycle(6), complete(3), complete(4), hypercube(3))],
    )
    def test_vertex_transitive_law(self, g, h):
        assert is_vertex_transitive(g) and is_vertex_transitive(h)
        b = independence_number(direct_product(g, h))
        assert b == max(g.n * independence_number(h), h.n * independence_number(g))

    @pytest.mark.parametrize(
        "orders",
        [o for r in (2, 3) for o in combinations_with_replacement(range(2, 5), r)],
    )
    def test_complete_factor_independence(self, orders):
        total = prod(orders)
        assert independence_number(multi_complete_direct(orders)) == max(total // n for n in orders)


class TestHamiltonian:
    def test_examples(self):
        assert is_hamiltonian(cycle(5))
        assert not is_hamiltonian(path(4))
        assert is_hamiltonian(complete(4))
        assert not is_hamiltonian(complete(2))
        assert not is_hamiltonian(complete(1))
        assert not is_hamiltonian(Graph.from_edges(10, list(nx.petersen_graph().edges())))

    def test_limit(self):
        with pytest.raises(TooLargeError):
            is_hamiltonian(cycle(17))
        assert is_hamiltonian(cycle(17), limit=17)

    def test_against_permutation_search(self):
        def brute(g):
            if g.n < 3:
                return False
            return any(
                all(g.has_edge(c[i], c[(i + 1) % g.n]) for i in range(g.n))
                for c in ((0,) + p for p in permutations(range(1, g.n)))
            )

        for n in range(2, 7):
            for g in connected_graphs(n):
                assert is_hamiltonian(g) == brute(g)


class TestTransitive:
    def test_examples(self):
        assert is_vertex_transitive(cycle(7))
        assert not is_vertex_transitive(path(4))
        assert not is_vertex_transitive(star(3))
        assert is_vertex_transitive(Graph.from_edges(10, list(nx.petersen_graph().edges())))

    def test_limit(self):
        with pytest.raises(TooLargeError):
            is_vertex_transitive(cycle(13))

    def test_against_networkx_isomorphism(self):
        def oracle(g):
            h = to_nx(g)
            gm = nx.algorithms.isomorphism.GraphMatcher(h, h)
            orbit = {m[0] for m in gm.isomorphisms_iter()}
            return len(orbit) == g.n

        for n in range(2, 7):
            for g in connected_graphs(n):
                assert is_vertex_transitive(g) == oracle(g)

    def test_regular_but_not_transitive(self):
        # cubic with a trivial automorphism group
        frucht = Graph.from_edges(12, list(nx.frucht_graph().edges()))
        assert not is_vertex_transitive(frucht)
        assert all(frucht.degree(u) == 3 for u in range(12))
