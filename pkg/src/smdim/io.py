"""Edge-list and graph6 serialisation."""

from __future__ import annotations

import warnings

from .errors import ParseError
from .graph import Graph, Label

GRAPH6_HEADER = ">>graph6<<"


class DuplicateEdgeWarning(UserWarning):
    """Emitted when an edge list repeats an edge; duplicates are collapsed."""


def format_label(label: Label) -> str:
    if isinstance(label, tuple):
        return f"({format_label(label[0])},{format_label(label[1])})"
    return str(label)


def parse_label(text: str) -> Label:
    label, end = _label_at(text.strip(), 0)
    if end != len(text.strip()):
        raise ParseError("malformed-line", f"bad vertex label {text!r}")
    return label


def _label_at(s: str, i: int) -> tuple[Label, int]:
    if i < len(s) and s[i] == "(":
        left, i = _label_at(s, i + 1)
        if i >= len(s) or s[i] != ",":
            raise ParseError("malformed-line", f"bad vertex label {s!r}")
        right, i = _label_at(s, i + 1)
        if i >= len(s) or s[i] != ")":
            raise ParseError("malformed-line", f"bad vertex label {s!r}")
        return (left, right), i + 1
    j = i
    while j < len(s) and s[j].isdigit():
        j += 1
    if j == i:
        raise ParseError("malformed-line", f"bad vertex label {s!r}")
    return int(s[i:j]), j


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``.

    Blank lines and ``#`` comments are skipped, except ``# label i L`` lines
    (written by :func:`format_edge_list`) which restore vertex labels.
    Repeated edges are collapsed with a :class:`DuplicateEdgeWarning`.
    """
    rows: list[tuple[int, str]] = []
    label_lines: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].split(maxsplit=2)
            if len(body) == 3 and body[0] == "label":
                label_lines.append((lineno, line))
            continue
        rows.append((lineno, line))
    if not rows:
        raise ParseError("malformed-line", "missing 'n m' header line")
    n, m = _int_pair(*rows[0])
    if n < 0 or m < 0:
        raise ParseError("malformed-line", f"line {rows[0][0]}: negative count")
    if len(rows) - 1 != m:
        raise ParseError(
            "malformed-line", f"header announces {m} edges but {len(rows) - 1} follow"
        )
    seen: set[tuple[int, int]] = set()
    duplicates = 0
    for lineno, line in rows[1:]:
        u, v = _int_pair(lineno, line)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError("vertex-out-of-range", f"line {lineno}: {line!r} with n={n}")
        if u == v:
            raise ParseError("self-loop", f"line {lineno}: {line!r}")
        key = (min(u, v), max(u, v))
        if key in seen:
            duplicates += 1
        seen.add(key)
    if duplicates:
        warnings.warn(f"collapsed {duplicates} duplicate edge(s)", DuplicateEdgeWarning)

    labels: list[Label] = list(range(n))
    for lineno, line in label_lines:
        _, idx, lab = line[1:].split(maxsplit=2)
        try:
            i = int(idx)
        except ValueError:
            raise ParseError("malformed-line", f"line {lineno}: {line!r}") from None
        if not 0 <= i < n:
            raise ParseError("vertex-out-of-range", f"line {lineno}: {line!r}")
        labels[i] = parse_label(lab)
    try:
        return Graph(labels, sorted(seen))
    except ValueError as exc:
        raise ParseError("malformed-line", str(exc)) from None


def _int_pair(lineno: int, line: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError("malformed-line", f"line {lineno}: expected two integers, got {line!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("malformed-line", f"line {lineno}: expected two integers, got {line!r}") from None


def format_edge_list(g: Graph, *, with_labels: bool = True) -> str:
    """Inverse of :func:`parse_edge_list`.

    Label comment lines are written only when some label differs from its index.
    """
    lines = []
    if with_labels and any(lab != i for i, lab in enumerate(g.labels)):
        lines += [f"# label {i} {format_label(lab)}" for i, lab in enumerate(g.labels)]
    lines.append(f"{g.n} {g.m}")
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def _encode_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def encode_graph6(g: Graph) -> str:
    """graph6 string (no header, no newline); labels are not encoded."""
    bits = [
        1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)
    ]
    bits += [0] * (-len(bits) % 6)
    data = "".join(
        chr(63 + int("".join(map(str, bits[k : k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_size(g.n) + data


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` prefix is accepted)."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise ParseError("bad-header", "empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise ParseError("bad-header", f"character {ch!r} outside the graph6 alphabet")
    vals = [ord(c) - 63 for c in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n, pos = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        raise ParseError("bad-header", f"cannot decode vertex count from {s[:8]!r}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    data = vals[pos:]
    if len(data) < need:
        raise ParseError("truncated-bits", f"expected {need} data bytes, found {len(data)}")
    if len(data) > need:
        raise ParseError("trailing-data", f"expected {need} data bytes, found {len(data)}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (data[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)
