"""Closed-form family values and the EC = m characterizations."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Callable, Iterator

from ..canon import canonical_key
from ..coalition import is_singleton_ec
from ..errors import SizeCapExceeded, TimeBudgetExceeded
from ..generate import generate_graphs, generate_trees, generate_unicyclic
from ..graph import Graph, complete, complete_bipartite, cycle, double_star, path, star
from ..solver import SolverConfig, ec_exact

CLASSES = ("tree", "unicyclic", "other")
EXACT_ORDER_CAP = 8


@dataclass
class FamilyRow:
    family: str
    param: str
    expected: str
    computed: str
    passed: bool


def _solve(g: Graph, budget: float | None) -> tuple[int, int]:
    try:
        v = ec_exact(g, SolverConfig(max_edges=max(24, g.m), time_budget=budget)).value
        return v, v
    except TimeBudgetExceeded as exc:
        return exc.lo, exc.hi


def _fmt(lo: int, hi: int) -> str:
    return str(lo) if lo == hi else f"[{lo},{hi}]"


def family_cases(max_bipartite_edges: int = 16) -> Iterator[tuple[str, str, Graph, str, Callable[[int, int], bool]]]:
    """(family, param, graph, expected text, predicate on the EC interval)."""
    def eq(v: int) -> Callable[[int, int], bool]:
        return lambda lo, hi: lo == hi == v

    def at_most(v: int) -> Callable[[int, int], bool]:
        return lambda lo, hi: hi <= v

    for n in range(2, 7):
        m = n * (n - 1) // 2
        if n <= 5:
            yield "complete", str(n), complete(n), f"= {m}", eq(m)
        else:
            yield "complete", str(n), complete(n), f"< {m}", lambda lo, hi, m=m: hi < m
    for r in range(2, 7):
        for s in range(r, 13):
            if r * s <= max_bipartite_edges:
                yield "complete_bipartite", f"{r},{s}", complete_bipartite(r, s), f"= {2 * s}", eq(2 * s)
    for n in range(1, 9):
        yield "star", str(n), star(n), f"= {n}", eq(n)
    for p in range(1, 9):
        for q in range(p, 10 - p):
            yield "double_star", f"{p},{q}", double_star(p, q), f"= {p + q + 1}", eq(p + q + 1)
    for n in range(3, 15):
        exp, pred = ("= 4", eq(4)) if n == 6 else ("<= 5", at_most(5))
        yield "path", str(n), path(n), exp, pred
    for n in range(3, 15):
        if n in (4, 5):
            yield "cycle", str(n), cycle(n), f"= {n}", eq(n)
        else:
            yield "cycle", str(n), cycle(n), "<= 6", at_most(6)


def run_family_suite(budget: float | None = 120.0, max_bipartite_edges: int = 16) -> list[FamilyRow]:
    """Compute every family row; failures are recorded, never raised."""
    rows = []
    for fam, param, g, expected, pred in family_cases(max_bipartite_edges):
        lo, hi = _solve(g, budget)
        rows.append(FamilyRow(fam, param, expected, _fmt(lo, hi), pred(lo, hi)))
    return rows


def rows_to_csv(rows: list[FamilyRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["family", "param", "expected", "computed", "pass"])
    for r in rows:
        w.writerow([r.family, r.param, r.expected, r.computed, "pass" if r.passed else "fail"])
    return buf.getvalue()


# --- textual families -------------------------------------------------------------


def _attach_leaves(n: int, edges: list[tuple[int, int]], centre: int, k: int) -> int:
    for _ in range(k):
        edges.append((centre, n))
        n += 1
    return n


def subdivided_double_star(a: int, b: int) -> Graph:
    """Two stars with a leaves and b leaves whose centres share a common neighbour."""
    edges = [(0, 1), (0, 2)]
    n = _attach_leaves(3, edges, 1, a)
    n = _attach_leaves(n, edges, 2, b)
    return Graph(n, tuple(edges))


def textual_trees(n_max: int) -> dict[str, list[Graph]]:
    """Tree family members with at most n_max vertices, grouped by description."""
    out: dict[str, list[Graph]] = {"P2": [], "star": [], "double star": [], "subdivided double star": []}
    if n_max >= 2:
        out["P2"].append(path(2))
    out["star"] = [star(k) for k in range(2, n_max)]
    out["double star"] = [double_star(p, q) for p in range(1, n_max) for q in range(p, n_max) if p + q + 2 <= n_max]
    out["subdivided double star"] = [
        subdivided_double_star(a, b) for a in range(1, n_max) for b in range(a, n_max) if a + b + 3 <= n_max
    ]
    return out


def _cycle_with_leaves(k: int, counts: tuple[int, ...]) -> Graph:
    edges = [(i, (i + 1) % k) for i in range(k)]
    n = k
    for v, c in enumerate(counts):
        n = _attach_leaves(n, edges, v, c)
    return Graph(n, tuple((min(u, v), max(u, v)) for u, v in edges))


def _c3_double_star(p: int, q: int) -> Graph:
    # cycle vertex 0 is one centre: p leaves there, plus a neighbour w carrying q leaves
    edges = [(0, 1), (1, 2), (0, 2), (0, 3)]
    n = _attach_leaves(4, edges, 0, p)
    n = _attach_leaves(n, edges, 3, q)
    return Graph(n, tuple(edges))


READINGS = ("text", "figure")


def textual_unicyclic(n_max: int, reading: str = "text") -> dict[str, list[Graph]]:
    """Unicyclic family members with at most n_max vertices, grouped by item.

    ``reading`` selects how the C3 + double star item is built: "text" puts
    at least one leaf on the centre shared with the triangle, "figure" puts
    none there (a star hung from a triangle vertex by one edge).
    """
    if reading not in READINGS:
        raise ValueError(f"reading must be one of {READINGS}")
    out: dict[str, list[Graph]] = {k: [] for k in ("a", "b", "c", "d", "e")}
    out["a"] = [cycle(k) for k in range(3, min(6, n_max) + 1)]
    extra = n_max - 3
    for a in range(extra + 1):
        for b in range(a, extra + 1 - a):
            for c in range(b, extra + 1 - a - b):
                if a + b + c:
                    out["b"].append(_cycle_with_leaves(3, (c, b, a)))
    p_range = range(1, n_max) if reading == "text" else range(0, 1)
    for p in p_range:
        for q in range(1, n_max):
            if 4 + p + q <= n_max:
                out["c"].append(_c3_double_star(p, q))
    extra = n_max - 4
    for a in range(1, extra + 1):
        out["d"].append(_cycle_with_leaves(4, (a,)))
        for b in range(a, extra + 1 - a):
            out["d"].append(_cycle_with_leaves(4, (a, b)))
            out["d"].append(_cycle_with_leaves(4, (a, 0, b)))
    for a in range(1, n_max - 4):
        out["e"].append(_cycle_with_leaves(5, (a,)))
    return out


def _class_graphs(n: int, cls: str) -> tuple[Graph, ...]:
    if cls == "tree":
        return generate_trees(n) if n >= 2 else ()
    if cls == "unicyclic":
        return generate_unicyclic(n)
    if cls == "other":
        return tuple(g for g in generate_graphs(n) if g.is_connected() and g.m > g.n)
    raise ValueError(f"class must be one of {CLASSES}")


def characterize_ec_equals_m(n_max: int, cls: str) -> list[str]:
    """Canonical keys (hex) of connected graphs of the class with EC = m.

    EC = m exactly when every edge is its own class, so the test is whether
    the singleton partition is an ec-partition.
    """
    if cls not in CLASSES:
        raise ValueError(f"class must be one of {CLASSES}")
    if n_max > EXACT_ORDER_CAP:
        raise SizeCapExceeded(f"characterization limited to n <= {EXACT_ORDER_CAP}")
    keys = []
    for n in range(1, n_max + 1):
        for g in _class_graphs(n, cls):
            if g.m and is_singleton_ec(g):
                keys.append(canonical_key(g).hex())
    return keys


@dataclass
class FamilyComparison:
    computed: list[str]
    textual: dict[str, list[str]]
    missing: list[str]  # textual members whose EC is not m
    unexplained: list[str]  # computed members matching no textual item

    @property
    def agrees(self) -> bool:
        return not self.missing and not self.unexplained


def compare_with_textual(n_max: int, cls: str, reading: str = "text") -> FamilyComparison:
    computed = characterize_ec_equals_m(n_max, cls)
    if cls == "tree":
        groups = textual_trees(n_max)
    elif cls == "unicyclic":
        groups = textual_unicyclic(n_max, reading)
    else:
        groups = {}
    textual = {k: sorted({canonical_key(g).hex() for g in gs}) for k, gs in groups.items()}
    all_text = {k for ks in textual.values() for k in ks}
    comp = set(computed)
    return FamilyComparison(
        computed=computed,
        textual=textual,
        missing=sorted(all_text - comp),
        unexplained=[k for k in computed if k not in all_text],
    )


# --- small EC characterizations -----------------------------------------------------

CLAIMED_SMALL_EC = {
    1: ("K2",),
    2: ("P3", "2K2"),
    3: ("K3", "P4", "K1,3"),
}


def _components(g: Graph) -> list[Graph]:
    seen: set[int] = set()
    out = []
    for s in range(g.n):
        if s in seen:
            continue
        comp, stack = {s}, [s]
        while stack:
            v = stack.pop()
            for u in range(g.n):
                if g.vertex_adj[v] >> u & 1 and u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        order = sorted(comp)
        idx = {v: i for i, v in enumerate(order)}
        out.append(Graph(len(order), tuple((idx[u], idx[v]) for u, v in g.edges if u in comp)))
    return out


def _name_connected(g: Graph) -> str:
    if g.n == 1:
        return "K1"
    named = [path(g.n), star(g.n - 1), complete(g.n)]
    labels = [f"P{g.n}", f"K1,{g.n - 1}", f"K{g.n}"]
    if g.n >= 3:
        named.append(cycle(g.n))
        labels.append(f"C{g.n}")
    for h, label in zip(named, labels):
        if h.m == g.m and canonical_key(h) == canonical_key(g):
            return label
    from ..graphio import write_graph6

    return f"[{write_graph6(g)}]"


def describe(g: Graph) -> str:
    """Readable name built from the components, e.g. "2K2" or "K2 + P3"."""
    g = g.without_isolated_vertices()
    if g.m == 0:
        return "empty"
    counts: dict[str, int] = {}
    for c in _components(g):
        name = _name_connected(c)
        counts[name] = counts.get(name, 0) + 1
    # P2 and K1,1 both name K2; prefer K2, and P3 over K1,2
    parts = []
    for name, k in sorted(counts.items()):
        name = {"P2": "K2", "K1,2": "P3"}.get(name, name)
        parts.append(f"{k}{name}" if k > 1 else name)
    return " + ".join(parts)


CONNECTED_NAMES = {"K2", "P3", "K3", "P4", "K1,3"}


@dataclass
class SmallEcRow:
    value: int
    variant: str
    claimed: tuple[str, ...]
    found: list[str]

    @property
    def expected(self) -> list[str]:
        """The claim restricted to what the variant can contain."""
        if self.variant == "connected":
            return [c for c in self.claimed if c in CONNECTED_NAMES]
        return list(self.claimed)

    @property
    def excluded(self) -> list[str]:
        """Claimed members the variant cannot contain (disconnected ones)."""
        return [c for c in self.claimed if c not in self.expected]

    @property
    def matches(self) -> bool:
        return sorted(self.found) == sorted(self.expected)

    @property
    def missing(self) -> list[str]:
        return [c for c in self.expected if c not in self.found]

    @property
    def extra(self) -> list[str]:
        return [f for f in self.found if f not in self.expected]

    def line(self) -> str:
        text = f"EC={self.value} ({self.variant}): found {self.found}, claimed {list(self.claimed)}"
        if self.excluded:
            text += f"; claimed but disconnected: {self.excluded}"
        if self.extra:
            text += f"; unexpected: {self.extra}"
        if self.missing:
            text += f"; missing: {self.missing}"
        return text


def small_ec_characterization(n_max: int = 6, budget: float | None = 60.0) -> list[SmallEcRow]:
    """Graphs with EC in {1, 2, 3}, for connected graphs and for all graphs.

    In the all-graphs variant isolated vertices are ignored (they carry no
    edges) and graphs without edges are skipped.
    """
    from ..generate import all_graphs_upto

    found: dict[tuple[int, str], dict[bytes, str]] = {(k, v): {} for k in CLAIMED_SMALL_EC for v in ("connected", "all")}
    for g in all_graphs_upto(n_max):
        if g.m == 0:
            continue
        lo, hi = _solve(g, budget)
        if lo > 3:
            continue
        if lo != hi:
            raise RuntimeError(f"undecided EC interval [{lo},{hi}] for a small graph")
        h = g.without_isolated_vertices()
        key = canonical_key(h, max(10, h.n))
        found[(lo, "all")][key] = describe(h)
        if g.is_connected():
            found[(lo, "connected")][key] = describe(h)
    rows = []
    for (k, variant), hits in found.items():
        rows.append(SmallEcRow(k, variant, CLAIMED_SMALL_EC[k], sorted(hits.values())))
    return rows
