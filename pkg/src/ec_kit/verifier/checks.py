"""Check definitions evaluated against each sweep record.

A check has a hypothesis (which graphs it applies to) and a claim about the
computed EC interval and certificate. Claims return True/False, or None
when an EC interval is too wide to decide.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

from ..canon import canonical_key
from ..coalition import classify
from ..domination import edge_domatic_number, edge_domatic_upper_bound, has_domatic_partition
from ..graph import EdgePartition, Graph, complete, complete_bipartite, disjoint_union, path, star
from ..solver import ec_lower_bound, ec_upper_bound


class Severity(str, enum.Enum):
    ASSERT = "assert"
    REPORT = "report"


@dataclass
class CheckContext:
    graph: Graph
    lo: int
    hi: int
    certificate: EdgePartition | None

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @cached_property
    def stripped(self) -> Graph:
        return self.graph.without_isolated_vertices()

    @cached_property
    def stripped_key(self) -> bytes:
        return canonical_key(self.stripped, max(10, self.stripped.n))

    def at_least(self, x: float) -> bool | None:
        if self.lo >= x:
            return True
        if self.hi < x:
            return False
        return None

    def equals(self, x: int) -> bool | None:
        if self.exact:
            return self.lo == x
        return False if not self.lo <= x <= self.hi else None


@dataclass(frozen=True)
class CheckDefinition:
    name: str
    hypothesis: str
    applies: Callable[[Graph], str | None]  # None when applicable, else the skip reason
    claim: Callable[[CheckContext], bool | None]
    severity: Severity = Severity.REPORT
    description: str = ""

    def evaluate(self, ctx: CheckContext) -> str:
        reason = self.applies(ctx.graph)
        if reason is not None:
            return f"skipped({reason})"
        verdict = self.claim(ctx)
        if verdict is None:
            return "skipped(undecided interval)"
        return "pass" if verdict else "fail"


def _always(g: Graph) -> str | None:
    return None


# --- definitional checks ---------------------------------------------------------


def _certificate_valid(ctx: CheckContext) -> bool:
    c = ctx.certificate
    if c is None or c.m != ctx.graph.m:
        return False
    return classify(ctx.graph, c.classes).is_ec and c.order == ctx.lo


def _bound_sandwich(ctx: CheckContext) -> bool:
    lo, _, _ = ec_lower_bound(ctx.graph)
    hi, _ = ec_upper_bound(ctx.graph)
    return lo <= ctx.lo and ctx.hi <= hi


def _trivial_range(ctx: CheckContext) -> bool:
    return 1 <= ctx.lo <= ctx.hi <= ctx.graph.m


def _needs_max_degree_2(g: Graph) -> str | None:
    return None if g.max_degree() >= 2 else "max degree < 2"


def _partner_cap(ctx: CheckContext) -> bool | None:
    if not ctx.exact or ctx.certificate is None:
        return None
    cap = 2 * ctx.graph.max_degree() - 1
    verdict = classify(ctx.graph, ctx.certificate.classes)
    return all(n <= cap for n in verdict.partner_counts())


def _delta_hyp(g: Graph) -> str | None:
    if g.full_edges:
        return "has a full edge"
    if g.min_degree() < 1:
        return "min degree 0"
    return None


def _delta_bound(ctx: CheckContext) -> bool | None:
    return ctx.at_least(ctx.graph.min_degree() + 1)


def _domatic_hyp(g: Graph) -> str | None:
    if g.full_edges:
        return "has a full edge"
    if any(d == 0 for d in g.edge_degrees):
        return "has an isolated edge"
    return None


def _domatic_bound(ctx: CheckContext) -> bool | None:
    g = ctx.graph
    if not has_domatic_partition(g, 2):
        return False
    # an upper bound on ed settles the claim without the exact value when EC is large
    if ctx.at_least(2 * edge_domatic_upper_bound(g) - 1):
        return True
    ed, _ = edge_domatic_number(g, cap=g.m)
    return ctx.at_least(2 * ed - 1)


def _universal_count(g: Graph) -> int:
    return sum(1 for d in g.degrees if d == g.n - 1)


def _universal_hyp(g: Graph) -> str | None:
    if g.m == g.n * (g.n - 1) // 2:
        return "complete graph"
    if _universal_count(g) == 0:
        return "no universal vertex"
    return None


def _universal_bound(ctx: CheckContext) -> bool | None:
    g = ctx.graph
    return ctx.at_least(_universal_count(g) * (g.n - 1) / 2 + 1)


# --- small-EC characterizations ------------------------------------------------


def _keys(*graphs: Graph) -> frozenset[bytes]:
    return frozenset(canonical_key(h) for h in graphs)


EC1_GRAPHS = _keys(path(2))
EC2_CONNECTED = _keys(path(3))
EC2_ALL = _keys(path(3), disjoint_union(path(2), path(2)))
EC3_GRAPHS = _keys(complete(3), path(4), star(3))


def _connected_hyp(g: Graph) -> str | None:
    return None if g.is_connected() else "disconnected"


def _nonempty_hyp(g: Graph) -> str | None:
    return None if g.m else "no edges"


def _iff(value: int, members: frozenset[bytes]) -> Callable[[CheckContext], bool | None]:
    def claim(ctx: CheckContext) -> bool | None:
        is_member = ctx.stripped.n <= 10 and ctx.stripped_key in members
        eq = ctx.equals(value)
        if eq is None:
            return None
        return eq == is_member

    return claim


@dataclass
class CheckRegistry:
    checks: list[CheckDefinition] = field(default_factory=list)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def by_name(self, name: str) -> CheckDefinition:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def evaluate(self, ctx: CheckContext) -> dict[str, str]:
        return {c.name: c.evaluate(ctx) for c in self.checks}


DEFINITIONAL = [
    CheckDefinition("certificate_valid", "any graph with edges", _always, _certificate_valid,
                    Severity.ASSERT, "certificate is an ec-partition of order ec_lo"),
    CheckDefinition("trivial_range", "any graph with edges", _always, _trivial_range,
                    Severity.ASSERT, "1 <= EC <= m"),
    CheckDefinition("bound_sandwich", "any graph with edges", _always, _bound_sandwich,
                    Severity.ASSERT, "constructive lower bound <= EC <= counting upper bound"),
]

THEOREMS = [
    CheckDefinition("partner_cap", "max degree >= 2", _needs_max_degree_2, _partner_cap,
                    Severity.ASSERT, "every class of an optimal partition has <= 2*maxdeg - 1 partners"),
    CheckDefinition("min_degree_bound", "no full edge, min degree >= 1", _delta_hyp, _delta_bound,
                    Severity.ASSERT, "EC >= mindeg + 1"),
    CheckDefinition("edge_domatic_bound", "no isolated or full edge", _domatic_hyp, _domatic_bound,
                    Severity.ASSERT, "3 <= 2*ed - 1 <= EC"),
    CheckDefinition("universal_vertex_bound", "not complete, k >= 1 universal vertices", _universal_hyp,
                    _universal_bound, Severity.REPORT, "EC >= k(n-1)/2 + 1"),
]

CHARACTERIZATIONS = [
    CheckDefinition("ec1_iff_k2", "connected", _connected_hyp, _iff(1, EC1_GRAPHS),
                    Severity.REPORT, "EC = 1 iff G = K2"),
    CheckDefinition("ec2_iff_p3_connected", "connected", _connected_hyp, _iff(2, EC2_CONNECTED),
                    Severity.REPORT, "EC = 2 iff G = P3 (connected graphs)"),
    CheckDefinition("ec2_iff_p3_2k2_all", "isolated vertices ignored", _nonempty_hyp, _iff(2, EC2_ALL),
                    Severity.REPORT, "EC = 2 iff G in {P3, 2K2} (all graphs)"),
    CheckDefinition("ec3_iff_k3_p4_k13_connected", "connected", _connected_hyp, _iff(3, EC3_GRAPHS),
                    Severity.REPORT, "EC = 3 iff G in {K3, P4, K1,3} (connected graphs)"),
    CheckDefinition("ec3_iff_k3_p4_k13_all", "isolated vertices ignored", _nonempty_hyp, _iff(3, EC3_GRAPHS),
                    Severity.REPORT, "EC = 3 iff G in {K3, P4, K1,3} (all graphs)"),
]


def default_registry() -> CheckRegistry:
    return CheckRegistry(DEFINITIONAL + THEOREMS + CHARACTERIZATIONS)


def kr_s_expected(r: int, s: int) -> int:
    return 2 * s if r >= 2 else s


__all__ = [
    "CheckContext",
    "CheckDefinition",
    "CheckRegistry",
    "Severity",
    "default_registry",
    "complete_bipartite",
]
