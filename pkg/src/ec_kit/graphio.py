"""Text formats: graph6 (short form, n <= 62), plain edge lists, DOT export."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator, TextIO

from .errors import GraphError, MalformedGraph6, UnsupportedOrder
from .graph import Graph, make_graph

GRAPH6_HEADER = ">>graph6<<"
MAX_GRAPH6_ORDER = 62


def write_graph6(g: Graph) -> str:
    """Encode ``g`` under its current labeling (no canonical relabeling)."""
    n = g.n
    if n > MAX_GRAPH6_ORDER:
        raise UnsupportedOrder(f"graph6 short form supports n <= {MAX_GRAPH6_ORDER}, got {n}")
    adj = g.vertex_adj
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(adj[i] >> j & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line. Edges come out in lexicographic order."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    if s[0] == "~":
        raise UnsupportedOrder("graph6 long form (n > 62) is not supported")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise MalformedGraph6(f"character outside graph6 range in {text!r}")
    n = codes[0]
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(codes) - 1 != need:
        raise MalformedGraph6(f"expected {need} data bytes for n={n}, got {len(codes) - 1}")
    stream = []
    for c in codes[1:]:
        stream.extend((c >> (5 - k)) & 1 for k in range(6))
    if any(stream[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if stream[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, tuple(sorted(edges)))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


def read_graph6_file(path: str | Path) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        return list(read_graph6_lines(fh))


def write_graph6_file(path: str | Path, graphs: Iterable[Graph]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(write_graph6(g) + "\n")


def parse_edge_list(text: str) -> Graph:
    """Parse the plain format: header line ``n m`` then ``m`` lines ``u v``."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with a line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"bad edge list: {exc}") from None
    if len(pairs) != m:
        raise GraphError(f"header announces {m} edges, found {len(pairs)}")
    return make_graph(n, pairs)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_inline_edges(spec: str) -> Graph:
    """Parse ``"n: u-v,u-v,..."``, e.g. ``"3: 0-1,1-2"`` for P3."""
    head, sep, body = spec.partition(":")
    if not sep:
        raise GraphError(f"inline edges need the form 'n: u-v,...', got {spec!r}")
    try:
        n = int(head)
        pairs = []
        for tok in body.replace(" ", "").split(","):
            if not tok:
                continue
            a, b = tok.split("-")
            pairs.append((int(a), int(b)))
    except ValueError:
        raise GraphError(f"cannot parse inline edge list {spec!r}") from None
    return make_graph(n, pairs)


def to_dot(g: Graph, name: str = "G", edge_labels: bool = True) -> str:
    out = [f"graph {name} {{"]
    out.extend(f"  {v};" for v in range(g.n))
    for i, (u, v) in enumerate(g.edges):
        label = f' [label="e{i}"]' if edge_labels else ""
        out.append(f"  {u} -- {v}{label};")
    out.append("}")
    return "\n".join(out) + "\n"


def load_graph_source(path: str | Path) -> list[Graph]:
    """Read a file holding either graph6 lines or one plain edge list."""
    text = Path(path).read_text()
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    if len(first.split()) == 2 and all(tok.isdigit() for tok in first.split()):
        return [parse_edge_list(text)]
    return list(read_graph6_lines(text.splitlines()))


def dump_lines(fh: TextIO, graphs: Iterable[Graph]) -> None:
    for g in graphs:
        fh.write(write_graph6(g) + "\n")
