"""Acceptance criteria, one test each, each printing a single PASS/FAIL line.

All comparisons are exact integers. Run with ``pytest tests/test_acceptance.py -v``;
the verdict lines are written straight to the terminal.
"""

from __future__ import annotations

import random

import networkx as nx
import pytest

from conftest import brute_independence, to_nx
from smdim.catalog import DEFAULT_FACTORS, STRUCTURAL_DEFAULTS, verify_formula, verify_structural
from smdim.cli import main
from smdim.corpus import connected_graphs, random_connected_graphs, resolve_graph
from smdim.cover import independence_number, vertex_cover_number
from smdim.families import complete, cycle, hypercube, parse_family_spec
from smdim.graph import Graph, cartesian_product, direct_product, is_bipartite
from smdim.io import encode_graph6, parse_graph6
from smdim.matching import matching_number
from smdim.sdim import product_sdim_bounds, sdim_bounds, sdim_oracle, strong_metric_dimension
from smdim.structure import is_vertex_transitive


@pytest.fixture
def verdict(capsys):
    def emit(number: int, title: str, problems: list[str], detail: str) -> None:
        status = "PASS" if not problems else "FAIL"
        with capsys.disabled():
            print(f"\n[criterion {number}] {status}: {title} ({detail})")
            for p in problems[:20]:
                print(f"    {p}")
        assert not problems, f"criterion {number}: {len(problems)} problem(s)"

    return emit


def _is_path(g: Graph) -> bool:
    return g.m == g.n - 1 and max(g.degree(u) for u in range(g.n)) <= 2


def test_criterion_1_oracle_equivalence(corpus, verdict):
    problems = []
    for name, g in corpus:
        fast, slow = strong_metric_dimension(g).value, sdim_oracle(g).value
        if fast != slow:
            problems.append(f"{name}: sr_reduction={fast} oracle={slow}")
    verdict(1, "dim_s = alpha(G_SR) agrees with brute force", problems, f"{len(corpus)} graphs")


FORMULA_SWEEPS = [
    ("cycle", None),
    ("tree_leaves", None),
    ("kn_box_pr", None),
    ("cn_box_pr", None),
    ("kn_box_c2k", None),
    ("cn_box_c2k", None),
    ("kn_box_kr", None),
    ("codd_box_codd", None),
    ("multi_complete_box", None),
    ("hamming", None),
    ("kr_times_kt", None),
    ("cr_times_kt", None),
    ("pr_times_kt", None),
    ("codd_times_codd", None),
    ("beta_circulant2", None),
]


def test_criterion_2_formula_sweeps(verdict):
    problems, total = [], 0
    for fid, ranges in FORMULA_SWEEPS:
        report = verify_formula(fid, ranges)
        total += len(report.instances)
        for inst in report.failures():
            problems.append(f"{fid} {inst.params}: computed={inst.computed} formula={inst.formula} {inst.message}")
    # the named spot values
    spot = {
        "H_3,3": strong_metric_dimension(resolve_graph("B(B(K:3,K:3),K:3)")).value == 18,
        "K_3 x K_4": strong_metric_dimension(direct_product(complete(3), complete(4))).value == 9,
        "C_3 x C_3": strong_metric_dimension(direct_product(cycle(3), cycle(3))).value == 6,
        "C_5 x C_5": strong_metric_dimension(direct_product(cycle(5), cycle(5))).value == 15,
    }
    problems += [f"spot value {k} wrong" for k, ok in spot.items() if not ok]
    verdict(2, "closed formulas match exact values", problems,
            f"{len(FORMULA_SWEEPS)} sweeps, {total} instances")


def test_criterion_3_structural_identities(verdict):
    problems, total = [], 0
    runs = [
        ("sr_product_identity", {"a": DEFAULT_FACTORS, "b": DEFAULT_FACTORS}),
        ("boundary_product", {"a": DEFAULT_FACTORS, "b": DEFAULT_FACTORS}),
        ("kr_kt_sr", {"r": [3, 4, 5], "t": [3, 4, 5]}),
        ("interval_product", {"pairs": [("P:3", "C:4"), ("K:3", "P:3")]}),
        ("eq1_consistency", STRUCTURAL_DEFAULTS["eq1_consistency"]),
    ]
    assert len(STRUCTURAL_DEFAULTS["eq1_consistency"]["pairs"]) == 10
    for check, ranges in runs:
        report = verify_structural(check, ranges)
        total += len(report.instances)
        problems += [f"{check} {i.params}: {i.status} {i.computed}/{i.formula}" for i in report.failures()]
        problems += [f"{check} {i.params}: unexpected skip" for i in report.instances if i.status == "skip"]
    verdict(3, "product identities hold structurally", problems, f"{total} instances")


CHAIN_PAIRS = [
    ("P:3", "P:4"), ("C:5", "K:3"), ("C:4", "C:6"), ("K:3", "K:4"), ("S:3", "C:5"),
    ("Kb:2,3", "P:3"), ("C:5", "C:3"), ("Q:3", "K:3"), ("CR:7,2", "P:2"), ("S:4", "S:3"),
]


def test_criterion_4_classical_lemmas(corpus, verdict):
    problems = []
    bip = 0
    for name, g in corpus:
        if is_bipartite(g) is not None:
            bip += 1
            if vertex_cover_number(g).size != matching_number(g):
                problems.append(f"Konig-Egervary fails on {name}")
    gallai_pool = [g for _, g in corpus] + random_connected_graphs(60, 10, 14, seed=5)
    for g in gallai_pool:
        if vertex_cover_number(g).size + brute_independence(g) != g.n:
            problems.append(f"Gallai fails on {encode_graph6(g)}")
    for a_name, b_name in CHAIN_PAIRS:
        g, h = resolve_graph(a_name), resolve_graph(b_name)
        gh = vertex_cover_number(direct_product(g, h)).size
        mid = matching_number(h) * vertex_cover_number(direct_product(g, complete(2))).size
        low = 2 * matching_number(g) * matching_number(h)
        if not gh >= mid >= low:
            problems.append(f"cover chain fails on ({a_name},{b_name}): {gh} >= {mid} >= {low}")
        b, bg, bh = independence_number(direct_product(g, h)), independence_number(g), independence_number(h)
        if not max(h.n * bg, g.n * bh) <= b <= h.n * bg + g.n * bh - bg * bh:
            problems.append(f"independence sandwich fails on ({a_name},{b_name})")
    vt = [cycle(n) for n in range(3, 7)] + [complete(n) for n in range(2, 5)] + [hypercube(3)]
    for g in vt:
        for h in vt:
            assert is_vertex_transitive(g) and is_vertex_transitive(h)
            b = independence_number(direct_product(g, h))
            if b != max(g.n * independence_number(h), h.n * independence_number(g)):
                problems.append(f"vertex-transitive law fails on {encode_graph6(g)} x {encode_graph6(h)}")
    verdict(4, "classical lemmas on the corpus", problems,
            f"{bip} bipartite, {len(gallai_pool)} Gallai, {len(CHAIN_PAIRS)} pairs, {len(vt) ** 2} VT pairs")


def test_criterion_5_characterisations(corpus, verdict):
    problems = []
    small = [(n, g) for n, g in corpus if g.n <= 8]
    for name, g in small:
        if (strong_metric_dimension(g).value == 1) != _is_path(g):
            problems.append(f"dim_s = 1 iff path fails on {name}")
    factors = [g for n in range(2, 6) for g in connected_graphs(n)]
    for g in factors:
        for h in factors:
            two = strong_metric_dimension(cartesian_product(g, h)).value == 2
            if two != (_is_path(g) and _is_path(h)):
                problems.append(f"dim_s = 2 iff both paths fails on {encode_graph6(g)}, {encode_graph6(h)}")
    verdict(5, "path characterisations", problems,
            f"{len(small)} graphs, {len(factors) ** 2} factor pairs")


def test_criterion_6_bounds(corpus, verdict):
    problems = []
    for name, g in corpus:
        if strong_metric_dimension(g).value not in sdim_bounds(g):
            problems.append(f"sdim_bounds misses on {name}")
    pairs = [
        tuple(str(c) for c in spec.children)
        for spec in (parse_family_spec(n) for n, _ in corpus if n.startswith("B("))
        if spec.kind == "cartesian"
    ]
    pairs += [(a, b) for a in DEFAULT_FACTORS for b in DEFAULT_FACTORS]
    for a_name, b_name in pairs:
        g, h = resolve_graph(a_name), resolve_graph(b_name)
        b = product_sdim_bounds(g, h)
        v = strong_metric_dimension(cartesian_product(g, h)).value
        if v not in b:
            problems.append(f"product bounds [{b.lower},{b.upper}] miss {v} on ({a_name},{b_name})")
    verdict(6, "bounds bracket exact values", problems, f"{len(corpus)} graphs, {len(pairs)} products")


def test_criterion_7_cli_contract(tmp_path, capsys, monkeypatch, verdict):
    problems = []
    monkeypatch.setenv("SMD_REPORT_DIR", str(tmp_path))
    c7 = tmp_path / "c7.el"
    if main(["family", "--spec", "C:7", "--out", str(c7)]) != 0:
        problems.append("family --spec C:7 failed")
    capsys.readouterr()
    code = main(["sdim", "--in", str(c7)])
    out = capsys.readouterr().out
    if code != 0 or "sdim=4" not in out.splitlines():
        problems.append(f"sdim on C_7: exit {code}, output {out!r}")
    code = main(["verify", "--theorem", "hamming", "--range", "k=2..3,n=2..3"])
    capsys.readouterr()
    if code != 0:
        problems.append(f"verify hamming exit {code}")
    bad = tmp_path / "disconnected.el"
    bad.write_text("4 2\n0 1\n2 3\n")
    code = main(["sdim", "--in", str(bad)])
    err = capsys.readouterr().err
    if code != 2 or "graph is not connected" not in err:
        problems.append(f"disconnected input: exit {code}, stderr {err!r}")
    rng = random.Random(20240917)
    for _ in range(100):
        n = rng.randint(1, 30)
        p = rng.random()
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        code6 = encode_graph6(g)
        if parse_graph6(code6) != g:
            problems.append(f"graph6 round trip fails for {code6}")
        if code6 != nx.to_graph6_bytes(to_nx(g), header=False).decode().strip():
            problems.append(f"graph6 encoding differs from networkx for n={n}")
    verdict(7, "CLI examples and graph6 round trip", problems, "3 commands, 100 graphs")
