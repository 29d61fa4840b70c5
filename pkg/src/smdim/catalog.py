"""Closed formulas for resolved families and the sweeps that check them.

:func:`formula_sdim` evaluates a closed formula, refusing parameters outside the
hypotheses it is proved under. :func:`verify_formula` and
:func:`verify_structural` build concrete instances, compute the exact value
with the solvers, and collect a :class:`VerificationReport`.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Any, Callable, Iterable, Mapping

from .corpus import resolve_graph, seeded_tree
from .cover import independence_number
from .errors import OutOfRangeError, SmdError, TooLargeError
from .families import (
    circulant,
    complete,
    cycle,
    hamming,
    leaf_count,
    multi_complete_cartesian,
    path,
)
from .graph import (
    Graph,
    cartesian_product,
    component_vertex_sets,
    direct_product,
    is_bipartite,
    is_regular,
)
from .matching import has_perfect_matching
from .metric import (
    all_pairs_distances,
    boundary,
    in_interval,
    is_distance_regular,
)
from .sdim import strong_metric_dimension
from .srgraph import (
    sr_direct_complete_identity_check,
    sr_product_identity_check,
    strong_resolving_graph,
)
from .structure import (
    HAMILTONIAN_LIMIT,
    TRANSITIVE_LIMIT,
    is_hamiltonian,
    is_vertex_transitive,
)


def _ceil_half(x: int) -> int:
    return (x + 1) // 2


def _cr_times_kt(r: int, t: int) -> int:
    if r in (4, 5):
        return t * (r - 1)
    if r % 2 == 0:
        return t * r // 2
    return t * (r - r // 3)


def _multi_complete(*ns: int) -> int:
    total = math.prod(ns)
    return total - max(total // x for x in ns)


@dataclass(frozen=True)
class Formula:
    id: str
    args: tuple[str, ...]
    evaluate: Callable[..., int]
    valid: Callable[..., bool]
    hypothesis: str
    variadic: bool = False


def _f(id, args, evaluate, valid, hypothesis, variadic=False):
    return Formula(id, tuple(args.split()), evaluate, valid, hypothesis, variadic)


FORMULAS: dict[str, Formula] = {
    f.id: f
    for f in [
        _f("cycle", "n", _ceil_half, lambda n: n >= 3, "n >= 3"),
        _f("tree_leaves", "l", lambda l: l - 1, lambda l: l >= 2, "l >= 2"),
        _f("complete", "n", lambda n: n - 1, lambda n: n >= 2, "n >= 2"),
        _f("two_antipodal_pair", "n r", lambda n, r: n * r // 2,
           lambda n, r: n >= 2 and r >= 2 and n % 2 == 0 and r % 2 == 0,
           "even orders n, r >= 2"),
        _f("antipodal_times_simplicial", "n s", lambda n, s: n * s // 2,
           lambda n, s: n >= 2 and n % 2 == 0 and s >= 2, "even n >= 2, s >= 2"),
        _f("kn_box_pr", "n r", lambda n, r: n, lambda n, r: n >= 2 and r >= 2, "n, r >= 2"),
        _f("tree_box_pr", "l r", lambda l, r: l, lambda l, r: l >= 2 and r >= 2, "l, r >= 2"),
        _f("cn_box_pr", "n r", lambda n, r: n, lambda n, r: n >= 3 and r >= 2, "n >= 3, r >= 2"),
        _f("kn_box_c2k", "n k", lambda n, k: n * k, lambda n, k: n >= 2 and k >= 2, "n, k >= 2"),
        _f("tree_box_c2k", "l k", lambda l, k: l * k, lambda l, k: l >= 2 and k >= 2, "l, k >= 2"),
        _f("cn_box_c2k", "n k", lambda n, k: n * k, lambda n, k: n >= 3 and k >= 2, "n >= 3, k >= 2"),
        _f("kn_box_kr", "n r", lambda n, r: min(n * (r - 1), r * (n - 1)),
           lambda n, r: n >= 2 and r >= 2, "n, r >= 2"),
        _f("t1_box_t2", "l1 l2", lambda a, b: min(a * (b - 1), b * (a - 1)),
           lambda a, b: a >= 2 and b >= 2, "l1, l2 >= 2"),
        _f("codd_box_codd", "n r",
           lambda n, r: min((2 * n + 1) * (r + 1), (2 * r + 1) * (n + 1)),
           lambda n, r: n >= 1 and r >= 1, "n, r >= 1 (cycles C_{2n+1}, C_{2r+1})"),
        _f("kn_box_codd", "n r", lambda n, r: min(n * (r + 1), (2 * r + 1) * (n - 1)),
           lambda n, r: n >= 2 and r >= 1, "n >= 2, r >= 1"),
        _f("tree_box_codd", "l r", lambda l, r: min(l * (r + 1), (2 * r + 1) * (l - 1)),
           lambda l, r: l >= 2 and r >= 1, "l >= 2, r >= 1"),
        _f("kn_box_tree", "n l", lambda n, l: min(l * (n - 1), n * (l - 1)),
           lambda n, l: n >= 2 and l >= 2, "n, l >= 2"),
        _f("multi_complete_box", "orders", _multi_complete,
           lambda *ns: len(ns) >= 1 and all(x >= 2 for x in ns), "every n_i >= 2",
           variadic=True),
        _f("hamming", "k n", lambda k, n: (n - 1) * n ** (k - 1),
           lambda k, n: k >= 1 and n >= 2, "k >= 1, n >= 2"),
        _f("codd_times_codd", "k", lambda k: (2 * k + 1) * (k + 1), lambda k: k >= 1, "k >= 1"),
        _f("kr_times_kt", "r t", lambda r, t: max(r * (t - 1), t * (r - 1)),
           lambda r, t: r >= 3 and t >= 3, "r, t >= 3"),
        _f("cr_times_kt", "r t", _cr_times_kt, lambda r, t: r >= 4 and t >= 3, "r >= 4, t >= 3"),
        _f("pr_times_kt", "r t", lambda r, t: t * _ceil_half(r),
           lambda r, t: r >= 2 and t >= 3, "r >= 2, t >= 3"),
        _f("beta_circulant2", "n", lambda n: n // 3, lambda n: n >= 4, "n >= 4"),
    ]
}


def formula_sdim(id: str, params: Iterable[int]) -> int:
    """Closed-form value of formula ``id``; :class:`OutOfRangeError` outside its hypotheses."""
    try:
        f = FORMULAS[id]
    except KeyError:
        raise OutOfRangeError(f"unknown formula id {id!r}") from None
    params = tuple(params)
    if not f.variadic and len(params) != len(f.args):
        raise OutOfRangeError(f"{id} takes parameters {f.args}, got {params}")
    if not f.valid(*params):
        raise OutOfRangeError(f"{id}{params} outside the formula's hypotheses ({f.hypothesis})")
    return f.evaluate(*params)


# Instance builders: sweep keys -> (graph, formula parameters, derived params).
# ``measure`` is "sdim" except for beta_circulant2.

def _tree(seed: int) -> tuple[Graph, int]:
    t = seeded_tree(seed)
    return t, leaf_count(t)


def _b_tree_leaves(seed):
    t, l = _tree(seed)
    return t, (l,), {"l": l}


def _b_tree_with(other: Callable[[int], Graph], tree_left: bool):
    def build(p, q):
        seed, x = (p, q) if tree_left else (q, p)
        t, l = _tree(seed)
        g = cartesian_product(t, other(x)) if tree_left else cartesian_product(other(x), t)
        return g, ((l, x) if tree_left else (x, l)), {"l": l}
    return build


def _b_t1_t2(seed1, seed2):
    t1, l1 = _tree(seed1)
    t2, l2 = _tree(seed2)
    return cartesian_product(t1, t2), (l1, l2), {"l1": l1, "l2": l2}


def _box(a: Callable[[int], Graph], b: Callable[[int], Graph]):
    return lambda x, y: (cartesian_product(a(x), b(y)), (x, y), {})


def _times(a: Callable[[int], Graph], b: Callable[[int], Graph]):
    return lambda x, y: (direct_product(a(x), b(y)), (x, y), {})


def _odd(k: int) -> Graph:
    return cycle(2 * k + 1)


def _even(k: int) -> Graph:
    return cycle(2 * k)


@dataclass(frozen=True)
class Sweep:
    keys: tuple[str, ...]
    build: Callable[..., tuple[Graph, tuple[int, ...], dict]]
    measure: str = "sdim"
    default: Mapping[str, Any] = field(default_factory=dict)


def _r(a: int, b: int) -> list[int]:
    return list(range(a, b + 1))


SWEEPS: dict[str, Sweep] = {
    "cycle": Sweep(("n",), lambda n: (cycle(n), (n,), {}), default={"n": _r(3, 14)}),
    "tree_leaves": Sweep(("seed",), _b_tree_leaves, default={"seed": _r(0, 19)}),
    "complete": Sweep(("n",), lambda n: (complete(n), (n,), {}), default={"n": _r(2, 8)}),
    "two_antipodal_pair": Sweep(("n", "r"), _box(cycle, cycle),
                                default={"n": [4, 6, 8], "r": [4, 6]}),
    "antipodal_times_simplicial": Sweep(("n", "s"), _box(cycle, complete),
                                        default={"n": [4, 6, 8], "s": _r(2, 4)}),
    "kn_box_pr": Sweep(("n", "r"), _box(complete, path), default={"n": _r(2, 5), "r": _r(2, 5)}),
    "tree_box_pr": Sweep(("seed", "r"), _b_tree_with(path, True),
                         default={"seed": _r(0, 7), "r": _r(2, 4)}),
    "cn_box_pr": Sweep(("n", "r"), _box(cycle, path), default={"n": _r(3, 6), "r": _r(2, 4)}),
    "kn_box_c2k": Sweep(("n", "k"), _box(complete, _even), default={"n": _r(2, 4), "k": _r(2, 3)}),
    "tree_box_c2k": Sweep(("seed", "k"), _b_tree_with(_even, True),
                          default={"seed": _r(0, 7), "k": _r(2, 3)}),
    "cn_box_c2k": Sweep(("n", "k"), _box(cycle, _even), default={"n": _r(3, 5), "k": _r(2, 3)}),
    "kn_box_kr": Sweep(("n", "r"), _box(complete, complete), default={"n": _r(2, 5), "r": _r(2, 5)}),
    "t1_box_t2": Sweep(("seed1", "seed2"), _b_t1_t2, default={"seed1": _r(0, 3), "seed2": _r(4, 7)}),
    "codd_box_codd": Sweep(("n", "r"), _box(_odd, _odd), default={"n": _r(1, 3), "r": _r(1, 3)}),
    "kn_box_codd": Sweep(("n", "r"), _box(complete, _odd), default={"n": _r(2, 5), "r": _r(1, 3)}),
    "tree_box_codd": Sweep(("seed", "r"), _b_tree_with(_odd, True),
                           default={"seed": _r(0, 7), "r": _r(1, 2)}),
    "kn_box_tree": Sweep(("n", "seed"), _b_tree_with(complete, False),
                         default={"n": _r(2, 4), "seed": _r(0, 7)}),
    "multi_complete_box": Sweep(("r", "n"), None, default={"r": [2, 3], "n": [2, 3]}),
    "hamming": Sweep(("k", "n"), lambda k, n: (hamming(k, n), (k, n), {}),
                     default={"points": [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)]}),
    "codd_times_codd": Sweep(("k",), lambda k: (direct_product(_odd(k), _odd(k)), (k,), {}),
                             default={"k": [1, 2]}),
    "kr_times_kt": Sweep(("r", "t"), _times(complete, complete), default={"r": _r(3, 5), "t": _r(3, 5)}),
    "cr_times_kt": Sweep(("r", "t"), _times(cycle, complete), default={"r": _r(4, 10), "t": [3, 4]}),
    "pr_times_kt": Sweep(("r", "t"), _times(path, complete), default={"r": _r(2, 7), "t": [3, 4]}),
    "beta_circulant2": Sweep(("n",), lambda n: (circulant(n, 2), (n,), {}), measure="beta",
                             default={"n": _r(5, 16)}),
}


STATUSES = ("pass", "fail", "skip", "error")


@dataclass(frozen=True)
class Instance:
    params: dict[str, Any]
    computed: int | None
    formula: int | None
    status: str
    message: str = ""

    def sort_key(self):
        return tuple((str(type(v).__name__), v) for v in self.params.values())


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    instances: tuple[Instance, ...]

    @property
    def all_pass(self) -> bool:
        return all(i.status in ("pass", "skip") for i in self.instances)

    def count(self, status: str) -> int:
        return sum(1 for i in self.instances if i.status == status)

    def failures(self) -> list[Instance]:
        return [i for i in self.instances if i.status in ("fail", "error")]

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "instances": [
                {
                    "params": i.params,
                    "computed": i.computed,
                    "formula": i.formula,
                    "status": i.status,
                    **({"message": i.message} if i.message else {}),
                }
                for i in self.instances
            ],
            "all_pass": self.all_pass,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["theorem", "params", "computed", "formula", "status", "message"])
        for i in self.instances:
            params = ";".join(f"{k}={v}" for k, v in i.params.items())
            w.writerow([self.theorem, params, i.computed, i.formula, i.status, i.message])
        return buf.getvalue()


def _report(theorem: str, instances: Iterable[Instance]) -> VerificationReport:
    return VerificationReport(theorem, tuple(sorted(instances, key=Instance.sort_key)))


def _compare(params: dict, computed: int, expected: int) -> Instance:
    return Instance(params, computed, expected, "pass" if computed == expected else "fail")


def _expand(keys: Iterable[str], ranges: Mapping[str, Iterable[Any]]) -> list[dict[str, Any]]:
    """Cartesian product of per-key ranges, or the explicit tuples under ``"points"``."""
    keys = tuple(keys)
    if "points" in ranges:
        return [dict(zip(keys, pt)) for pt in ranges["points"]]
    missing = [k for k in keys if k not in ranges]
    if missing:
        raise ValueError(f"missing ranges for {missing}")
    return [dict(zip(keys, combo)) for combo in product(*(list(ranges[k]) for k in keys))]


def _formula_points(id: str, ranges: Mapping[str, Iterable[Any]]) -> list[dict[str, Any]]:
    if id == "multi_complete_box":
        pts = []
        for r in ranges["r"]:
            for orders in combinations_with_replacement(sorted(ranges["n"]), r):
                pts.append({"orders": orders})
        return pts
    return _expand(SWEEPS[id].keys, ranges)


def run_formula_instance(id: str, params: dict[str, Any]) -> Instance:
    """Build one instance of formula ``id``, solve it exactly and compare."""
    try:
        if id == "multi_complete_box":
            orders = tuple(params["orders"])
            expected = formula_sdim(id, orders)
            g = multi_complete_cartesian(orders)
            shown = {"orders": "x".join(map(str, orders))}
            return _compare(shown, strong_metric_dimension(g).value, expected)
        sweep = SWEEPS[id]
        g, args, derived = sweep.build(*(params[k] for k in sweep.keys))
        expected = formula_sdim(id, args)
        if sweep.measure == "beta":
            computed = independence_number(g)
        else:
            computed = strong_metric_dimension(g).value
        return _compare({**params, **derived}, computed, expected)
    except SmdError as exc:
        return Instance(dict(params), None, None, "error", str(exc))


def _run_formula_args(args):
    return run_formula_instance(*args)


def verify_formula(
    id: str, param_ranges: Mapping[str, Iterable[Any]] | None = None, jobs: int = 1
) -> VerificationReport:
    """Sweep formula ``id`` over the Cartesian product of ``param_ranges``.

    ``None`` uses the sweep's default range. Solver errors are recorded on the
    instance rather than aborting the sweep.
    """
    if id not in SWEEPS:
        raise OutOfRangeError(f"unknown formula id {id!r}")
    ranges = SWEEPS[id].default if param_ranges is None else param_ranges
    points = _formula_points(id, ranges)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_formula_args, [(id, p) for p in points]))
    else:
        results = [run_formula_instance(id, p) for p in points]
    return _report(id, results)


# ---------------------------------------------------------------- structural

@dataclass(frozen=True)
class Limits:
    hamiltonian: int = HAMILTONIAN_LIMIT
    transitive: int = TRANSITIVE_LIMIT


class HypothesisNotMet(Exception):
    pass


def _skip(params: dict, why: str = "hypothesis-not-met") -> Instance:
    return Instance(params, None, None, "skip", why)


def _check_sr_product(a: Graph, b: Graph, limits: Limits) -> tuple[int, int]:
    return int(sr_product_identity_check(a, b)), 1


def _check_boundary_product(a: Graph, b: Graph, limits: Limits) -> tuple[int, int]:
    prod = cartesian_product(a, b)
    lhs = {prod.labels[i] for i in boundary(prod)}
    rhs = {(a.labels[x], b.labels[y]) for x in boundary(a) for y in boundary(b)}
    return int(lhs == rhs), 1


def _check_interval_product(a: Graph, b: Graph, limits: Limits) -> tuple[int, int]:
    """Count vertex triples where the product interval law holds, out of all triples."""
    prod = cartesian_product(a, b)
    dp, da, db = (all_pairs_distances(x) for x in (prod, a, b))
    nb = b.n
    ok = 0
    for x in range(prod.n):
        for z in range(prod.n):
            for w in range(prod.n):
                lhs = in_interval(dp, x, z, w)
                rhs = in_interval(da, x // nb, z // nb, w // nb) and in_interval(
                    db, x % nb, z % nb, w % nb
                )
                ok += lhs == rhs
    return ok, prod.n ** 3


def _sr_parts(g: Graph):
    sr = strong_resolving_graph(g)
    return sr, len(sr.labels)


def _check_eq1(a: Graph, b: Graph, limits: Limits) -> tuple[int, int]:
    ga, na = _sr_parts(a)
    gb, nb = _sr_parts(b)
    expected = na * nb - independence_number(direct_product(ga, gb))
    return strong_metric_dimension(cartesian_product(a, b)).value, expected


def _check_matching_theorem(a: Graph, b: Graph, limits: Limits) -> tuple[int, int]:
    ga, na = _sr_parts(a)
    gb, nb = _sr_parts(b)
    if is_bipartite(gb) is None or not has_perfect_matching(gb):
        raise HypothesisNotMet("H_SR is not bipartite with a perfect matching")
    for comp in component_vertex_sets(ga):
        c = ga.induced_subgraph(comp)
        if has_perfect_matching(c):
            continue
        if c.n > limits.hamiltonian:
            raise HypothesisNotMet("component too large for the Hamiltonicity check")
        if not is_hamiltonian(c, limits.hamiltonian):
            raise HypothesisNotMet("a component of G_SR is neither Hamiltonian nor perfectly matchable")
    return strong_metric_dimension(cartesian_product(a, b)).value, na * nb // 2


def _check_regular_factor(a: Graph, b: Graph, limits: Limits) -> tuple[int, int]:
    ga, na = _sr_parts(a)
    gb, nb = _sr_parts(b)
    if not (is_regular(ga) and is_regular(gb)):
        raise HypothesisNotMet("strong resolving graphs are not both regular")
    if is_bipartite(ga) is None and is_bipartite(gb) is None:
        raise HypothesisNotMet("neither strong resolving graph is bipartite")
    return strong_metric_dimension(cartesian_product(a, b)).value, na * nb // 2


def _check_vertex_transitive(a: Graph, b: Graph, limits: Limits) -> tuple[int, int]:
    ga, na = _sr_parts(a)
    gb, nb = _sr_parts(b)
    for s in (ga, gb):
        if s.n > limits.transitive:
            raise HypothesisNotMet("strong resolving graph too large for the transitivity check")
        if not is_vertex_transitive(s, limits.transitive):
            raise HypothesisNotMet("strong resolving graph is not vertex-transitive")
    da = strong_metric_dimension(a).value
    db = strong_metric_dimension(b).value
    expected = min(na * db, nb * da)
    return strong_metric_dimension(cartesian_product(a, b)).value, expected


def _check_distance_regular(a: Graph, b: Graph, limits: Limits) -> tuple[int, int]:
    if not is_distance_regular(a):
        raise HypothesisNotMet("G is not distance-regular")
    gb, nb = _sr_parts(b)
    if not is_regular(gb) or is_bipartite(gb) is None:
        raise HypothesisNotMet("H_SR is not regular bipartite")
    return strong_metric_dimension(cartesian_product(a, b)).value, a.n * nb // 2


def _is_path(g: Graph) -> bool:
    degs = sorted(g.degree(u) for u in range(g.n))
    return g.m == g.n - 1 and g.n >= 2 and degs[:2] == [1, 1] and all(d <= 2 for d in degs)


def _check_dims_two(a: Graph, b: Graph, limits: Limits) -> tuple[int, int]:
    value = strong_metric_dimension(cartesian_product(a, b)).value
    return int(value == 2), int(_is_path(a) and _is_path(b))


PAIR_CHECKS: dict[str, Callable[[Graph, Graph, Limits], tuple[int, int]]] = {
    "sr_product_identity": _check_sr_product,
    "boundary_product": _check_boundary_product,
    "interval_product": _check_interval_product,
    "eq1_consistency": _check_eq1,
    "matching_theorem_hypotheses": _check_matching_theorem,
    "regular_factor_theorem": _check_regular_factor,
    "vertex_transitive_theorem": _check_vertex_transitive,
    "distance_regular_corollary": _check_distance_regular,
    "dims_two_characterization": _check_dims_two,
}


def _check_kr_kt_sr(r: int, t: int) -> tuple[int, int]:
    return int(sr_direct_complete_identity_check(r, t)), 1


def _check_kr_box_kt_beta(r: int, t: int) -> tuple[int, int]:
    return independence_number(cartesian_product(complete(r), complete(t))), min(r, t)


GRID_CHECKS: dict[str, Callable[[int, int], tuple[int, int]]] = {
    "kr_kt_sr": _check_kr_kt_sr,
    "kr_box_kt_beta": _check_kr_box_kt_beta,
}

STRUCTURAL_CHECKS = tuple(PAIR_CHECKS) + tuple(GRID_CHECKS)

DEFAULT_FACTORS = (
    "P:2", "P:3", "P:4", "P:5", "C:3", "C:4", "C:5", "C:6",
    "K:2", "K:3", "K:4", "S:3", "Kb:2,3",
)

STRUCTURAL_DEFAULTS: dict[str, dict[str, Any]] = {
    "sr_product_identity": {"a": DEFAULT_FACTORS, "b": DEFAULT_FACTORS},
    "boundary_product": {"a": DEFAULT_FACTORS, "b": DEFAULT_FACTORS},
    "interval_product": {"pairs": [("P:3", "C:4"), ("K:3", "P:3")]},
    "eq1_consistency": {"pairs": [
        ("P:3", "P:4"), ("C:5", "K:3"), ("C:4", "C:6"), ("K:3", "K:4"), ("S:3", "C:5"),
        ("Kb:2,3", "P:3"), ("C:5", "C:7"), ("Q:3", "K:3"), ("CR:7,2", "P:2"), ("S:4", "S:3"),
    ]},
    "matching_theorem_hypotheses": {"a": ("C:5", "C:7", "K:3", "K:4", "S:3", "P:4", "C:6"),
                                    "b": ("C:4", "C:6", "C:8", "P:3", "Q:3", "K:3")},
    "regular_factor_theorem": {"a": ("C:5", "C:6", "K:3", "K:4", "Q:3", "Kb:3,3", "Kb:2,3"),
                               "b": ("C:4", "C:6", "P:3", "Q:3", "Kb:2,2")},
    "vertex_transitive_theorem": {"a": ("K:3", "K:4", "C:5", "C:7", "S:3", "P:4"),
                                  "b": ("K:2", "K:3", "C:3", "C:5", "S:4", "C:6", "Kb:2,3")},
    "distance_regular_corollary": {"a": ("C:5", "C:6", "K:4", "Q:3", "Kb:3,3", "C:7"),
                                   "b": ("C:4", "C:6", "C:8", "Q:3", "Kb:3,3", "P:3")},
    "dims_two_characterization": {"a": DEFAULT_FACTORS, "b": DEFAULT_FACTORS},
    "kr_kt_sr": {"r": _r(3, 5), "t": _r(3, 5)},
    "kr_box_kt_beta": {"r": _r(1, 6), "t": _r(1, 6)},
}


def run_structural_instance(check_id: str, params: dict[str, Any], limits: Limits = Limits()) -> Instance:
    try:
        if check_id in GRID_CHECKS:
            computed, expected = GRID_CHECKS[check_id](params["r"], params["t"])
        else:
            a, b = resolve_graph(params["a"]), resolve_graph(params["b"])
            computed, expected = PAIR_CHECKS[check_id](a, b, limits)
    except HypothesisNotMet as exc:
        return _skip(params, f"hypothesis-not-met: {exc}")
    except TooLargeError as exc:
        return _skip(params, f"hypothesis-not-met: {exc}")
    except SmdError as exc:
        return Instance(params, None, None, "error", str(exc))
    return _compare(params, computed, expected)


def _run_structural_args(args):
    return run_structural_instance(*args)


def verify_structural(
    check_id: str,
    param_ranges: Mapping[str, Iterable[Any]] | None = None,
    limits: Limits = Limits(),
    jobs: int = 1,
) -> VerificationReport:
    """Sweep a structural identity or hypothesis-guarded theorem.

    Pair checks take factor names (family grammar or ``g6:`` strings) either as
    ``{"a": [...], "b": [...]}`` (all combinations) or ``{"pairs": [(a, b), ...]}``;
    grid checks take integer ranges ``r`` and ``t``. Instances whose hypotheses
    fail are marked ``skip`` and never count as failures.
    """
    if check_id not in STRUCTURAL_CHECKS:
        raise OutOfRangeError(f"unknown structural check {check_id!r}")
    ranges = STRUCTURAL_DEFAULTS[check_id] if param_ranges is None else param_ranges
    if check_id in GRID_CHECKS:
        points = _expand(("r", "t"), ranges)
    elif "pairs" in ranges:
        points = [{"a": a, "b": b} for a, b in ranges["pairs"]]
    else:
        points = _expand(("a", "b"), ranges)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            args = [(check_id, p, limits) for p in points]
            results = list(pool.map(_run_structural_args, args))
    else:
        results = [run_structural_instance(check_id, p, limits) for p in points]
    return _report(check_id, results)


def verify(theorem: str, param_ranges=None, *, limits: Limits = Limits(), jobs: int = 1) -> VerificationReport:
    """Dispatch to :func:`verify_formula` or :func:`verify_structural` by id."""
    if theorem in FORMULAS:
        return verify_formula(theorem, param_ranges, jobs=jobs)
    return verify_structural(theorem, param_ranges, limits=limits, jobs=jobs)
