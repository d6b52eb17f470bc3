"""Edge domination: predicates, minimal dominating sets, edge-domatic number."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations

from .errors import EmptyEdgeSet, MismatchedGraph, NotDominating, SizeCapExceeded
from .graph import EdgePartition, EdgeSet, Graph, bits_of

MINIMAL_EDS_CAP = 20
DOMATIC_CAP = 16
DOMATIC_NODE_BUDGET = 5000


@dataclass(frozen=True)
class DominationReport:
    dominating: bool
    undominated: EdgeSet


def _require_edges(g: Graph) -> None:
    if g.m == 0:
        raise EmptyEdgeSet("graph has no edges")


def _mask(g: Graph, d: EdgeSet | int) -> int:
    if isinstance(d, EdgeSet):
        if d.m != g.m:
            raise MismatchedGraph(f"edge set built for m={d.m}, graph has m={g.m}")
        return d.bits
    return d


def check_edge_dominating(g: Graph, d: EdgeSet) -> DominationReport:
    """Every edge outside ``d`` must share an endpoint with some edge of ``d``."""
    _require_edges(g)
    bits = _mask(g, d)
    missing = g.full_mask & ~g.cover(bits)
    return DominationReport(missing == 0, EdgeSet(g.m, missing))


def is_minimal_dominating(g: Graph, bits: int) -> bool:
    if not g.dominates(bits):
        return False
    return all(not g.dominates(bits & ~(1 << i)) for i in bits_of(bits))


def enumerate_minimal_eds(g: Graph, cap: int = MINIMAL_EDS_CAP) -> list[EdgeSet]:
    """All inclusion-minimal edge dominating sets, in increasing bitmask order."""
    _require_edges(g)
    if g.m > cap:
        raise SizeCapExceeded(f"minimal EDS enumeration limited to m <= {cap}")
    m, nb = g.m, g.closed_nbhd
    found: list[int] = []

    # decide edges from index m-1 downward; an edge whose closed neighbourhood
    # is entirely excluded can never be dominated
    def rec(i: int, chosen: int, excluded: int) -> None:
        if i < 0:
            if is_minimal_dominating(g, chosen):
                found.append(chosen)
            return
        rec(i - 1, chosen | (1 << i), excluded)
        excluded |= 1 << i
        for f in bits_of(nb[i]):
            if nb[f] & ~excluded == 0:
                return
        rec(i - 1, chosen, excluded)

    rec(m - 1, 0, 0)
    found.sort()
    return [EdgeSet(m, b) for b in found]


def shrink_mask(g: Graph, bits: int) -> int:
    """Drop the highest-index removable edge until none can be removed."""
    changed = True
    while changed:
        changed = False
        for i in sorted(bits_of(bits), reverse=True):
            if g.dominates(bits & ~(1 << i)):
                bits &= ~(1 << i)
                changed = True
                break
    return bits


def shrink_to_minimal(g: Graph, d: EdgeSet) -> EdgeSet:
    _require_edges(g)
    bits = _mask(g, d)
    if not g.dominates(bits):
        raise NotDominating("cannot shrink a set that does not dominate")
    return EdgeSet(g.m, shrink_mask(g, bits))


def edge_domination_number(g: Graph) -> int:
    """Size of a smallest edge dominating set."""
    _require_edges(g)
    for k in range(1, g.m + 1):
        for combo in combinations(range(g.m), k):
            if g.dominates(sum(1 << i for i in combo)):
                return k
    raise AssertionError("the full edge set dominates")


class _NodeLimit(Exception):
    pass


def _domatic_assignment(g: Graph, k: int, gamma: int | None = None,
                        max_nodes: int | None = None) -> list[int] | None:
    """Colour edges with k colours so every closed neighbourhood sees all colours.

    Always branches on the neighbourhood with the least slack (uncoloured
    edges minus missing colours): one of its uncoloured edges must take its
    lowest missing colour. Colours not yet used anywhere are interchangeable,
    so only the first of them is tried. Every colour class dominates, so it
    ends up with at least ``gamma`` edges; the uncoloured edges must cover
    the shortfall. Raises _NodeLimit once ``max_nodes`` branches are spent.
    """
    m, nb = g.m, g.closed_nbhd
    if k == 1:
        return [0] * m
    if gamma is None:
        gamma = edge_domination_number(g)
    if k * gamma > m:
        return None
    counts = [0] * k
    state = {"left": m, "nodes": 0}
    all_colours = (1 << k) - 1
    colour = [-1] * m
    members = [list(bits_of(c)) for c in nb]
    seen = [0] * m
    free = [len(ms) for ms in members]
    # edges whose closed neighbourhood contains a given edge (symmetric relation)
    touched_by = members

    def pick() -> int | None:
        best, best_slack = -1, None
        for f in range(m):
            missing = all_colours & ~seen[f]
            if not missing:
                continue
            slack = free[f] - bin(missing).count("1")
            if slack < 0:
                return -2
            if best_slack is None or slack < best_slack:
                best, best_slack = f, slack
                if slack == 0:
                    break
        return best

    def assign(e: int, c: int) -> None:
        colour[e] = c
        counts[c] += 1
        state["left"] -= 1
        for f in touched_by[e]:
            free[f] -= 1
            seen[f] |= 1 << c

    def rec(used: int) -> bool:
        state["nodes"] += 1
        if max_nodes is not None and state["nodes"] > max_nodes:
            raise _NodeLimit
        if sum(gamma - x for x in counts if x < gamma) > state["left"]:
            return False
        f = pick()
        if f == -2:
            return False
        if f == -1:
            return True
        missing = all_colours & ~seen[f]
        c = (missing & -missing).bit_length() - 1
        if c > used:
            # a fresh colour: the first unused one stands for all of them
            fresh = used
            if not missing >> fresh & 1:
                return False
            c = fresh
        for e in members[f]:
            if colour[e] != -1:
                continue
            saved = [seen[x] for x in touched_by[e]]
            assign(e, c)
            if rec(max(used, c + 1)):
                return True
            colour[e] = -1
            counts[c] -= 1
            state["left"] += 1
            for x, sv in zip(touched_by[e], saved):
                seen[x] = sv
                free[x] += 1
        return False

    if not rec(0):
        return None
    return [c if c >= 0 else 0 for c in colour]


def _domatic_packing(g: Graph, k: int, gamma: int, minimal: list[int]) -> list[int] | None:
    """k pairwise disjoint minimal dominating sets, or None.

    The lowest available edge either starts the next set (as its smallest
    member) or stays unused, so every packing is met exactly once. Each
    remaining set needs ``gamma`` available edges and must meet every closed
    neighbourhood; failed states are memoised.
    """
    by_min: dict[int, list[int]] = {}
    for d in minimal:
        by_min.setdefault(d & -d, []).append(d)
    nb = g.closed_nbhd
    failed: set[tuple[int, int]] = set()
    chosen: list[int] = []

    def rec(avail: int, j: int) -> bool:
        if j == 0:
            return True
        if bin(avail).count("1") < j * gamma or (avail, j) in failed:
            return False
        if any(bin(c & avail).count("1") < j for c in nb):
            failed.add((avail, j))
            return False
        low = avail & -avail
        for d in by_min.get(low, ()):
            if d & ~avail == 0:
                chosen.append(d)
                if rec(avail & ~d, j - 1):
                    return True
                chosen.pop()
        if rec(avail & ~low, j):
            return True
        failed.add((avail, j))
        return False

    if not rec(g.full_mask, k):
        return None
    colour = [0] * g.m
    for c, d in enumerate(chosen):
        for e in bits_of(d):
            colour[e] = c
    return colour


def edge_domatic_upper_bound(g: Graph) -> int:
    """min(smallest closed neighbourhood, m // edge domination number)."""
    _require_edges(g)
    return min(min(bin(c).count("1") for c in g.closed_nbhd), g.m // edge_domination_number(g))


def has_domatic_partition(g: Graph, k: int) -> bool:
    """True iff the edges split into k edge dominating sets."""
    _require_edges(g)
    return k <= edge_domatic_upper_bound(g) and _domatic_assignment(g, k) is not None


def domatic_partitions(g: Graph, max_nodes: int = 20000) -> Iterator[EdgePartition]:
    """Domatic partitions of decreasing order, one per order the search settles.

    Each candidate order, from the upper bound down, gets a node budget of
    ``max_nodes``; an order whose search runs out is skipped, so the first
    partition can be short of the edge-domatic number on hard instances.
    The single class E(G) comes last.
    """
    _require_edges(g)
    gamma = edge_domination_number(g)
    for k in range(edge_domatic_upper_bound(g), 1, -1):
        try:
            colour = _domatic_assignment(g, k, gamma, max_nodes)
        except _NodeLimit:
            continue
        if colour is not None:
            yield EdgePartition.from_labels(colour)
    yield EdgePartition.from_labels([0] * g.m)


def edge_domatic_number(g: Graph, cap: int = DOMATIC_CAP) -> tuple[int, EdgePartition]:
    """Largest k such that E(G) splits into k edge dominating classes, with a witness."""
    _require_edges(g)
    if g.m > cap:
        raise SizeCapExceeded(f"edge-domatic search limited to m <= {cap}")
    # each class meets every closed neighbourhood and is at least as large
    # as a smallest dominating set
    upper = edge_domatic_upper_bound(g)
    gamma = edge_domination_number(g)
    minimal: list[int] | None = None
    for k in range(upper, 0, -1):
        # the colouring search finds partitions fast but refutes slowly;
        # past its node budget the packing search over minimal sets decides
        try:
            colour = _domatic_assignment(g, k, gamma, DOMATIC_NODE_BUDGET)
        except _NodeLimit:
            if minimal is None:
                minimal = [d.bits for d in enumerate_minimal_eds(g, max(cap, MINIMAL_EDS_CAP))]
            colour = _domatic_packing(g, k, gamma, minimal)
        if colour is not None:
            return k, EdgePartition.from_labels(colour)
    raise AssertionError("k = 1 is always feasible")
