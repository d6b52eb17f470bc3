"""Canonical forms for small graphs.

Individualization-refinement: colour refinement splits vertices by
iterated neighbour-colour multisets; remaining ties are broken by
individualizing each vertex of the first non-singleton cell in turn.
The canonical form is the smallest relabeled adjacency string over all
leaves. Twin vertices in a cell are interchangeable by an automorphism,
so only one of each twin class is branched on.
"""

from __future__ import annotations

from .errors import OrderTooLarge
from .graph import Graph, bits_of

DEFAULT_CAP = 10


def _refine(adj: tuple[int, ...], col: list[int]) -> list[int]:
    n = len(adj)
    ncolors = len(set(col))
    while True:
        sigs = [(col[v], tuple(sorted(col[u] for u in bits_of(adj[v])))) for v in range(n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return new
        col, ncolors = new, len(rank)


def _relabeled_code(adj: tuple[int, ...], col: list[int]) -> int:
    # col is a bijection onto 0..n-1; code bit order is column-major upper triangle
    n = len(adj)
    inv = [0] * n
    for v, c in enumerate(col):
        inv[c] = v
    code = 0
    for j in range(1, n):
        aj = adj[inv[j]]
        for i in range(j):
            code = (code << 1) | (aj >> inv[i] & 1)
    return code


def _search(adj: tuple[int, ...], col: list[int], best: list[int]) -> None:
    n = len(adj)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(col):
        cells.setdefault(c, []).append(v)
    if len(cells) == n:
        code = _relabeled_code(adj, col)
        if best[0] < 0 or code < best[0]:
            best[0] = code
        return
    target = min(c for c, vs in cells.items() if len(vs) > 1)
    cell = cells[target]
    reps: list[int] = []
    for v in cell:
        if not any((adj[v] & ~(1 << r)) == (adj[r] & ~(1 << v)) for r in reps):
            reps.append(v)
    for v in reps:
        split = [2 * c + (1 if (c == target and u != v) else 0) for u, c in enumerate(col)]
        _search(adj, _refine(adj, split), best)


def canonical_code(g: Graph, cap: int = DEFAULT_CAP) -> int:
    if g.n > cap:
        raise OrderTooLarge(f"canonical form limited to n <= {cap}, got n={g.n}")
    if g.n <= 1:
        return 0
    adj = g.vertex_adj
    best = [-1]
    _search(adj, _refine(adj, list(g.degrees)), best)
    return best[0]


def canonical_key(g: Graph, cap: int = DEFAULT_CAP) -> bytes:
    """Isomorphism-invariant byte string; equal keys iff isomorphic graphs."""
    code = canonical_code(g, cap)
    width = (g.n * (g.n - 1) // 2 + 7) // 8
    return bytes([g.n]) + code.to_bytes(width, "big")


def canonical_graph(g: Graph, cap: int = DEFAULT_CAP) -> Graph:
    """The representative graph encoded by :func:`canonical_key`."""
    code = canonical_code(g, cap)
    n = g.n
    nbits = n * (n - 1) // 2
    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if code >> k & 1:
                edges.append((i, j))
            k -= 1
    return Graph(n, tuple(sorted(edges)), g.name)


def key_hex(g: Graph, cap: int = DEFAULT_CAP) -> str:
    return canonical_key(g, cap).hex()


def is_isomorphic(g: Graph, h: Graph, cap: int = DEFAULT_CAP) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_key(g, cap) == canonical_key(h, cap)
