"""Coalition-graph catalog checks."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ..canon import canonical_key, is_isomorphic
from ..coalition import build_ecg, is_self_edge_coalition, is_singleton_ec, validate_partition
from ..generate import all_graphs_upto, generate_unicyclic
from ..graph import EdgePartition, Graph, complete, complete_bipartite, make_graph, star
from ..graphio import write_graph6

# K_{2,4} with left vertices 0, 1 and right vertices 2..5; edges in lexicographic
# order are a=(0,2) b=(0,3) c=(0,4) d=(0,5) e=(1,2) f=(1,3) g=(1,4) h=(1,5).
K24_LETTERS = "abcdefgh"

K24_PARTITIONS: dict[str, list[str]] = {
    "pi1": ["a", "b", "c", "d", "e", "f", "g", "h"],
    "pi2": ["ab", "c", "d", "e", "f", "g", "h"],
    "pi3": ["abc", "d", "e", "f", "g", "h"],
    "pi4": ["ab", "c", "d", "ef", "g", "h"],
    "pi5": ["ab", "cd", "ef", "g", "h"],
    "pi6": ["ab", "cd", "ef", "gh"],
}


def _plus_edge(g: Graph, u: int, v: int, name: str) -> Graph:
    return make_graph(g.n, list(g.edges) + [(u, v)], name)


def expected_k24_ecgs() -> dict[str, Graph]:
    k24 = complete_bipartite(2, 4)
    k23 = complete_bipartite(2, 3)
    return {
        "pi1": complete_bipartite(4, 4),
        "pi2": complete_bipartite(3, 4),
        "pi3": _plus_edge(k24, 0, 1, "K2,4+e"),
        "pi4": complete_bipartite(3, 3),
        "pi5": _plus_edge(k23, 0, 1, "K2,3+e"),
        "pi6": complete(4),
    }


def k24_partition(name: str) -> EdgePartition:
    classes = [[K24_LETTERS.index(ch) for ch in cls] for cls in K24_PARTITIONS[name]]
    return EdgePartition.from_lists(8, classes)


@dataclass
class CatalogItem:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class CatalogReport:
    items: list[CatalogItem] = field(default_factory=list)
    unicyclic_ecg_types: dict[str, int] = field(default_factory=dict)
    self_coalition: list[tuple[str, int, str]] = field(default_factory=list)  # (key, n, graph6)

    @property
    def passed(self) -> bool:
        return all(i.passed for i in self.items)

    def summary(self) -> str:
        lines = [f"{'PASS' if i.passed else 'FAIL'} {i.name} {i.detail}".rstrip() for i in self.items]
        lines.append(f"unicyclic singleton-ec coalition graph types: {len(self.unicyclic_ecg_types)}")
        for key, count in sorted(self.unicyclic_ecg_types.items()):
            lines.append(f"  {key}: {count} graph(s)")
        lines.append(f"self-edge-coalition graphs found: {len(self.self_coalition)}")
        for key, n, g6 in self.self_coalition:
            lines.append(f"  n={n} key={key} graph6={g6}")
        return "\n".join(lines)


def check_k24() -> list[CatalogItem]:
    g = complete_bipartite(2, 4)
    expected = expected_k24_ecgs()
    items = []
    for name in K24_PARTITIONS:
        p = k24_partition(name)
        if not validate_partition(g, p).is_ec:
            items.append(CatalogItem(f"K2,4 {name}", False, "not an ec-partition"))
            continue
        ecg = build_ecg(g, p).graph
        ok = is_isomorphic(ecg, expected[name])
        items.append(CatalogItem(f"K2,4 {name}", ok, f"ECG ~ {expected[name].name}" if ok else "ECG type differs"))
    return items


def check_stars(n_max: int = 8) -> list[CatalogItem]:
    items = []
    for n in range(2, n_max + 1):
        g = star(n - 1)
        ecg = build_ecg(g, EdgePartition.singletons(g.m)).graph
        ok = ecg.n == n - 1 and ecg.m == 0
        items.append(CatalogItem(f"star K1,{n - 1}", ok, f"ECG = {n - 1}K1" if ok else f"ECG has {ecg.m} edges"))
    return items


def unicyclic_ecg_types(n_max: int = 8) -> dict[str, int]:
    """Isomorphism types (canonical key hex) of singleton coalition graphs of unicyclic graphs."""
    counts: Counter[str] = Counter()
    for n in range(3, n_max + 1):
        for g in generate_unicyclic(n):
            if is_singleton_ec(g):
                ecg = build_ecg(g, EdgePartition.singletons(g.m)).graph
                counts[canonical_key(ecg).hex()] += 1
    return dict(counts)


def self_edge_coalition_graphs(n_max: int = 7) -> list[tuple[str, int, str]]:
    out = []
    for g in all_graphs_upto(n_max, connected=True, min_order=2):
        if is_self_edge_coalition(g):
            out.append((canonical_key(g).hex(), g.n, write_graph6(g)))
    return out


def verify_ecg_catalog(star_max: int = 8, unicyclic_max: int = 8, self_max: int = 7) -> CatalogReport:
    rep = CatalogReport()
    rep.items.extend(check_k24())
    rep.items.extend(check_stars(star_max))
    rep.unicyclic_ecg_types = unicyclic_ecg_types(unicyclic_max)
    rep.self_coalition = self_edge_coalition_graphs(self_max)
    return rep
