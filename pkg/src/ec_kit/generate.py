"""Exhaustive small-graph enumeration up to isomorphism.

Every graph on n vertices arises from some graph on n-1 vertices by adding
a vertex with an arbitrary neighbourhood, so the classes at order n are the
canonical-key deduplication of all such extensions. Trees and unicyclic
graphs are grown the same way by attaching a pendant vertex.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from typing import Iterator

from .canon import canonical_graph, canonical_key
from .graph import Graph, cycle
from .graphio import read_graph6_lines

# A000088 and A001349
GRAPH_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346)
CONNECTED_COUNTS = (1, 1, 1, 2, 6, 21, 112, 853, 11117)

BUNDLED_MAX_ORDER = 7


def _extend(g: Graph, neighbours: int) -> Graph:
    n = g.n
    new = tuple((v, n) for v in range(n) if neighbours >> v & 1)
    return Graph(n + 1, g.edges + new)


def _dedup(candidates: Iterator[Graph], cap: int) -> list[Graph]:
    seen: dict[bytes, Graph] = {}
    for h in candidates:
        key = canonical_key(h, cap)
        if key not in seen:
            seen[key] = canonical_graph(h, cap)
    return [seen[k] for k in sorted(seen)]


@lru_cache(maxsize=None)
def generate_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs of order ``n`` up to isomorphism, sorted by canonical key."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n == 0:
        return (Graph(0, ()),)
    smaller = generate_graphs(n - 1)
    cands = (_extend(g, s) for g in smaller for s in range(1 << (n - 1)))
    return tuple(_dedup(cands, max(n, 10)))


def _pendant_extensions(g: Graph) -> Iterator[Graph]:
    for v in range(g.n):
        yield Graph(g.n + 1, g.edges + ((v, g.n),))


@lru_cache(maxsize=None)
def generate_trees(n: int) -> tuple[Graph, ...]:
    if n < 1:
        raise ValueError("trees need n >= 1")
    if n == 1:
        return (Graph(1, ()),)
    prev = generate_trees(n - 1)
    return tuple(_dedup((h for g in prev for h in _pendant_extensions(g)), max(n, 10)))


@lru_cache(maxsize=None)
def generate_unicyclic(n: int) -> tuple[Graph, ...]:
    """Connected graphs with exactly one cycle (so m = n)."""
    if n < 3:
        return ()
    prev = generate_unicyclic(n - 1)
    cands = [cycle(n)] + [h for g in prev for h in _pendant_extensions(g)]
    return tuple(_dedup(iter(cands), max(n, 10)))


def bundled_graphs(n: int) -> list[Graph]:
    """Pregenerated graph6 list for order ``n`` shipped with the package."""
    if not 1 <= n <= BUNDLED_MAX_ORDER:
        raise ValueError(f"bundled lists cover 1 <= n <= {BUNDLED_MAX_ORDER}")
    text = resources.files("ec_kit.data").joinpath(f"graphs{n}.g6").read_text()
    return list(read_graph6_lines(text.splitlines()))


def all_graphs_upto(n_max: int, connected: bool = False, min_order: int = 1) -> list[Graph]:
    """Graphs of order ``min_order..n_max``, from bundled lists where available."""
    out: list[Graph] = []
    for n in range(min_order, n_max + 1):
        gs = bundled_graphs(n) if n <= BUNDLED_MAX_ORDER else list(generate_graphs(n))
        if connected:
            gs = [g for g in gs if g.is_connected()]
        out.extend(gs)
    return out
