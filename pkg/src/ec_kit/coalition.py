"""Edge coalitions, ec-partition verdicts and coalition graphs."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .canon import is_isomorphic
from .errors import (
    EmptyEdgeSet,
    EmptySet,
    MismatchedGraph,
    NotAnEcPartition,
    NotAPartition,
    OverlappingSets,
)
from .graph import EdgePartition, EdgeSet, Graph, bits_of


class ClassKind(str, enum.Enum):
    SINGLETON_DOMINATING = "singleton-dominating"
    PARTNERED = "partnered"
    ORPHAN = "orphan"
    # only produced under the permissive reading: a dominating class of size >= 2
    DOMINATING = "dominating"


@dataclass(frozen=True)
class ClassStatus:
    kind: ClassKind
    partners: tuple[int, ...] = ()
    dominates: bool = False

    def describe(self) -> str:
        if self.kind is ClassKind.PARTNERED:
            return f"partnered with {list(self.partners)}"
        if self.kind is ClassKind.ORPHAN and self.dominates:
            return "orphan (dominating but not a singleton)"
        return self.kind.value


@dataclass(frozen=True)
class PartitionVerdict:
    is_ec: bool
    class_status: tuple[ClassStatus, ...]

    def orphans(self) -> list[int]:
        return [i for i, s in enumerate(self.class_status) if s.kind is ClassKind.ORPHAN]

    def partner_counts(self) -> list[int]:
        return [len(s.partners) for s in self.class_status]


@dataclass(frozen=True)
class CoalitionGraph:
    graph: Graph
    source: EdgePartition


def _require_edges(g: Graph) -> None:
    if g.m == 0:
        raise EmptyEdgeSet("coalitions are undefined for graphs without edges")


def _check_partition(g: Graph, p: EdgePartition) -> None:
    if p.m != g.m:
        raise NotAPartition(f"partition covers m={p.m} edges, graph has m={g.m}")


def forms_edge_coalition(g: Graph, a: EdgeSet, b: EdgeSet) -> bool:
    """True iff neither set dominates but their union does."""
    _require_edges(g)
    for s in (a, b):
        if s.m != g.m:
            raise MismatchedGraph(f"edge set built for m={s.m}, graph has m={g.m}")
        if not s.bits:
            raise EmptySet("coalition members must be nonempty")
    if a.bits & b.bits:
        raise OverlappingSets("coalition members must be disjoint")
    ca, cb = g.cover(a.bits), g.cover(b.bits)
    full = g.full_mask
    return ca != full and cb != full and (ca | cb) == full


def classify(g: Graph, classes: tuple[int, ...], permissive: bool = False) -> PartitionVerdict:
    """Verdict for raw class masks (assumed to partition the edges)."""
    full = g.full_mask
    covers = [g.cover(c) for c in classes]
    dom = [cv == full for cv in covers]
    statuses = []
    for i, c in enumerate(classes):
        if dom[i]:
            single = c & (c - 1) == 0
            if single:
                statuses.append(ClassStatus(ClassKind.SINGLETON_DOMINATING, dominates=True))
            elif permissive:
                statuses.append(ClassStatus(ClassKind.DOMINATING, dominates=True))
            else:
                statuses.append(ClassStatus(ClassKind.ORPHAN, dominates=True))
            continue
        partners = tuple(
            j for j in range(len(classes)) if j != i and not dom[j] and (covers[i] | covers[j]) == full
        )
        kind = ClassKind.PARTNERED if partners else ClassKind.ORPHAN
        statuses.append(ClassStatus(kind, partners))
    is_ec = all(s.kind is not ClassKind.ORPHAN for s in statuses)
    return PartitionVerdict(is_ec, tuple(statuses))


def validate_partition(g: Graph, p: EdgePartition, permissive: bool = False) -> PartitionVerdict:
    """Classify every class; ``permissive`` also accepts non-singleton dominating classes."""
    _require_edges(g)
    _check_partition(g, p)
    return classify(g, p.classes, permissive)


def is_ec_partition(g: Graph, p: EdgePartition) -> bool:
    return validate_partition(g, p).is_ec


def build_ecg(g: Graph, p: EdgePartition) -> CoalitionGraph:
    verdict = validate_partition(g, p)
    if not verdict.is_ec:
        raise NotAnEcPartition(f"classes {verdict.orphans()} have no coalition partner")
    edges = tuple(
        (i, j) for i, s in enumerate(verdict.class_status) for j in s.partners if i < j
    )
    return CoalitionGraph(Graph(p.order, tuple(sorted(edges)), "ECG"), p)


def singleton_partition(g: Graph) -> EdgePartition:
    _require_edges(g)
    return EdgePartition.singletons(g.m)


def is_singleton_ec(g: Graph) -> bool:
    return validate_partition(g, singleton_partition(g)).is_ec


def is_self_edge_coalition(g: Graph, cap: int = 10) -> bool:
    """True iff the singleton partition is an ec-partition whose coalition graph is ``g``."""
    _require_edges(g)
    p = singleton_partition(g)
    if not validate_partition(g, p).is_ec:
        return False
    if g.m != g.n:
        return False
    return is_isomorphic(build_ecg(g, p).graph, g, cap)


def class_edges(g: Graph, mask: int) -> list[tuple[int, tuple[int, int]]]:
    return [(i, g.edges[i]) for i in bits_of(mask)]
