"""Command-line front end.

Scalar results go to stdout as ``key=value`` lines; diagnostics go to stderr.

Exit codes: 0 ok, 1 usage error, 2 input/parse error, 3 solver limit exceeded,
4 verification failures present.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Sequence

from .catalog import (
    FORMULAS,
    STRUCTURAL_CHECKS,
    GRID_CHECKS,
    Limits,
    verify,
)
from .errors import (
    DisconnectedGraphError,
    InvalidParameterError,
    ParseError,
    TooLargeError,
    TrivialGraphError,
)
from .families import make_family, parse_family_spec
from .graph import Graph, cartesian_product, direct_product
from .io import format_edge_list, format_label, parse_edge_list, parse_graph6
from .metric import all_pairs_distances, boundary, mmd_pairs, simplicial_vertices
from .sdim import ORACLE_LIMIT, sdim_oracle, strong_metric_dimension
from .srgraph import strong_resolving_graph
from .structure import HAMILTONIAN_LIMIT, TRANSITIVE_LIMIT

EXIT_USAGE, EXIT_INPUT, EXIT_LIMIT, EXIT_VERIFY = 1, 2, 3, 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _read_graph(path: str, fmt: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    if fmt == "graph6":
        return parse_graph6(text.strip().splitlines()[0] if text.strip() else "")
    return parse_edge_list(text)


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _labels(g: Graph, idx) -> str:
    return " ".join(format_label(g.labels[i]) for i in sorted(idx))


def parse_range(text: str) -> dict[str, list[int]]:
    """``"k=2..3,n=2|4"`` -> ``{"k": [2, 3], "n": [2, 4]}``."""
    out: dict[str, list[int]] = {}
    for part in filter(None, text.split(",")):
        key, sep, val = part.partition("=")
        if not sep or not key:
            raise _UsageError(f"bad range item {part!r}, expected KEY=LO..HI")
        try:
            if ".." in val:
                lo, hi = val.split("..")
                out[key.strip()] = list(range(int(lo), int(hi) + 1))
            else:
                out[key.strip()] = [int(v) for v in val.split("|")]
        except ValueError:
            raise _UsageError(f"bad range value {val!r}") from None
    return out


def _cmd_sdim(args) -> int:
    g = _read_graph(args.input, args.format)
    res = strong_metric_dimension(g)
    print(f"sdim={res.value}")
    print(f"basis={_labels(g, res.indices)}")
    print(f"method={res.method}")
    return 0


def _cmd_oracle(args) -> int:
    g = _read_graph(args.input, args.format)
    res = sdim_oracle(g, limit=args.limit_oracle)
    print(f"sdim={res.value}")
    print(f"basis={_labels(g, res.indices)}")
    print(f"method={res.method}")
    return 0


def _cmd_srgraph(args) -> int:
    g = _read_graph(args.input, args.format)
    sr = strong_resolving_graph(g)
    _write(args.out, format_edge_list(sr))
    if args.out != "-":
        print(f"vertices={sr.n}")
        print(f"edges={sr.m}")
    return 0


def _cmd_boundary(args) -> int:
    g = _read_graph(args.input, args.format)
    dm = all_pairs_distances(g)
    print(f"boundary={_labels(g, boundary(g, dm))}")
    print(f"simplicial={_labels(g, simplicial_vertices(g))}")
    print(f"mmd_pairs={len(mmd_pairs(g, dm))}")
    return 0


def _cmd_product(args) -> int:
    a = make_family(parse_family_spec(args.a))
    b = make_family(parse_family_spec(args.b))
    g = cartesian_product(a, b) if args.kind == "cartesian" else direct_product(a, b)
    _write(args.out, format_edge_list(g))
    if args.out != "-":
        print(f"vertices={g.n}")
        print(f"edges={g.m}")
    return 0


def _cmd_family(args) -> int:
    g = make_family(parse_family_spec(args.spec))
    _write(args.out, format_edge_list(g))
    if args.out != "-":
        print(f"vertices={g.n}")
        print(f"edges={g.m}")
    return 0


def _cmd_verify(args) -> int:
    theorem = args.theorem
    if theorem not in FORMULAS and theorem not in STRUCTURAL_CHECKS:
        raise _UsageError(f"unknown theorem id {theorem!r}")
    ranges = None
    if args.range:
        ranges = parse_range(args.range)
    if args.factors:
        if theorem in FORMULAS or theorem in GRID_CHECKS:
            raise _UsageError("--factors applies to pair-based structural checks only")
        names = [s.strip() for s in args.factors.split(";") if s.strip()]
        ranges = {"a": names, "b": names}
    limits = Limits(hamiltonian=args.limit_hamiltonian, transitive=args.limit_transitive)
    report = verify(theorem, ranges, limits=limits, jobs=args.jobs)

    out_dir = Path(os.environ.get("SMD_REPORT_DIR", "."))
    out_dir.mkdir(parents=True, exist_ok=True)
    json_path = out_dir / f"{theorem}.json"
    csv_path = out_dir / f"{theorem}.csv"
    json_path.write_text(report.to_json())
    csv_path.write_text(report.to_csv())

    print(f"theorem={theorem}")
    print(f"instances={len(report.instances)}")
    for status in ("pass", "fail", "skip", "error"):
        print(f"{status}={report.count(status)}")
    print(f"all_pass={'true' if report.all_pass else 'false'}")
    print(f"report_json={json_path}")
    print(f"report_csv={csv_path}")
    for inst in report.failures():
        print(
            f"{inst.status}: {inst.params} computed={inst.computed} formula={inst.formula} {inst.message}",
            file=sys.stderr,
        )
    return 0 if report.all_pass else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="smdim", description="Strong metric dimension toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_in(sp):
        sp.add_argument("--in", dest="input", required=True, help="graph file ('-' for stdin)")
        sp.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")

    sp = sub.add_parser("sdim", help="exact strong metric dimension")
    graph_in(sp)
    sp.set_defaults(func=_cmd_sdim)

    sp = sub.add_parser("oracle", help="brute-force strong metric dimension")
    graph_in(sp)
    sp.add_argument("--limit-oracle", type=int, default=ORACLE_LIMIT)
    sp.set_defaults(func=_cmd_oracle)

    sp = sub.add_parser("srgraph", help="write the strong resolving graph")
    graph_in(sp)
    sp.add_argument("--out", default="-")
    sp.set_defaults(func=_cmd_srgraph)

    sp = sub.add_parser("boundary", help="boundary, simplicial vertices, MMD pair count")
    graph_in(sp)
    sp.set_defaults(func=_cmd_boundary)

    sp = sub.add_parser("product", help="build a Cartesian or direct product")
    sp.add_argument("--kind", choices=("cartesian", "direct"), required=True)
    sp.add_argument("--a", required=True, help="family spec of the left factor")
    sp.add_argument("--b", required=True, help="family spec of the right factor")
    sp.add_argument("--out", default="-")
    sp.set_defaults(func=_cmd_product)

    sp = sub.add_parser("family", help="materialise a family instance")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--out", default="-")
    sp.set_defaults(func=_cmd_family)

    sp = sub.add_parser("verify", help="run a formula or structural sweep")
    sp.add_argument("--theorem", required=True)
    sp.add_argument("--range", help="e.g. k=2..3,n=2..3 (values LO..HI or A|B|C)")
    sp.add_argument("--factors", help="';'-separated factor specs for pair checks")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--limit-hamiltonian", type=int, default=HAMILTONIAN_LIMIT)
    sp.add_argument("--limit-transitive", type=int, default=TRANSITIVE_LIMIT)
    sp.set_defaults(func=_cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, DisconnectedGraphError, TrivialGraphError, InvalidParameterError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT
    except TooLargeError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_LIMIT
