"""Exact edge coalition numbers and the constructive lower bounds.

The exact search assigns edges, in index order, to classes in
restricted-growth-string order (an edge joins an existing class or opens
the next one), so the first optimum met is the RGS-first one.

Pruning on a partial state, with ``U`` the unassigned edges:

* full edges are forced singletons: a class holding a full edge dominates,
  and only singleton dominating classes are allowed;
* a class that dominates is dead (domination is monotone under growth);
* every class ``X`` needs some other class ``Y`` (or a fresh class drawn
  from ``U``) with ``cover(X) | cover(Y) | cover(U)`` equal to all edges;
* an edge whose whole closed neighbourhood is assigned is *settled*; a class
  opened later cannot touch it, so it can only partner an existing class
  that already dominates every settled edge. Without such an anchor no new
  class can open, and the count bound drops to the current class count.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from itertools import combinations, product

from .coalition import classify
from .domination import DOMATIC_CAP, shrink_mask, domatic_partitions
from .errors import (
    EmptyEdgeSet,
    HasFullEdge,
    InvalidFamilyParams,
    NoEdges,
    SizeCapExceeded,
    TimeBudgetExceeded,
)
from .graph import EdgePartition, Graph, bits_of, complete_bipartite

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolverConfig:
    max_edges: int = 24
    time_budget: float | None = None  # seconds; None = unlimited
    emit_all_optima: bool = False
    permissive: bool = False
    threads: int = 1

    def __post_init__(self) -> None:
        if self.max_edges < 1:
            raise ValueError("max_edges must be >= 1")


@dataclass
class EcResult:
    value: int
    certificate: EdgePartition
    bound_trace: list[tuple[str, int]] = field(default_factory=list)
    nodes: int = 0
    elapsed: float = 0.0
    all_optima: list[EdgePartition] | None = None

    @property
    def lower(self) -> int:
        return max(v for name, v in self.bound_trace if name.startswith("lower:"))

    @property
    def upper(self) -> int:
        return min(v for name, v in self.bound_trace if name.startswith("upper:"))


def _require_edges(g: Graph) -> None:
    if g.m == 0:
        raise EmptyEdgeSet("EC is undefined for graphs without edges")


def _is_ec(g: Graph, classes: tuple[int, ...] | list[int]) -> bool:
    return classify(g, tuple(classes)).is_ec


# --- upper bounds --------------------------------------------------------------


def ec_upper_bound(g: Graph) -> tuple[int, list[tuple[str, int]]]:
    """A valid upper bound on EC(g) with the per-bound breakdown.

    For a non-full edge ``e`` let H be the classes meeting N[e]. A class
    outside H misses ``e`` so its partner lies in H. A class X in H that
    contains ``h`` in N[e] leaves some edge ``f`` outside N[h] undominated, and
    its partners outside H are disjoint and each meets N[f] - N[e]. Hence
    ``EC <= |N[e]| + min(m - |N[e]|, sum_h max_f |N[f] - N[e]|)``.
    """
    _require_edges(g)
    m, nb, full = g.m, g.closed_nbhd, g.full_mask
    trace = [("upper:size", m)]
    best_e, best_val = -1, m
    for e in range(m):
        if nb[e] == full:
            continue
        ne = nb[e]
        size_ne = bin(ne).count("1")
        extra = 0
        for h in bits_of(ne):
            if nb[h] == full:
                continue
            far = full & ~nb[h]
            extra += max(bin(nb[f] & ~ne).count("1") for f in bits_of(far))
        val = size_ne + min(m - size_ne, extra)
        if val < best_val:
            best_e, best_val = e, val
    if best_e >= 0:
        trace.append((f"upper:neighbourhood(e{best_e})", best_val))
    return min(v for _, v in trace), trace


# --- constructive lower bounds -------------------------------------------------


def _split_in_two(bits: int) -> tuple[int, int]:
    low = bits & -bits
    return low, bits & ~low


def existence_partition(g: Graph, cap: int = DOMATIC_CAP) -> EdgePartition:
    """ec-partition built from a large edge-domatic partition.

    Non-singleton dominating classes are shrunk to minimal ones (leftovers
    pooled into the last of them) and each minimal class is split into two
    coalition halves; the pooled class is shrunk and split the same way and
    its residue either stands alone, when it has a partner, or is merged
    into the second half. Should the result fail to validate (the residue
    merge can in principle dominate), alternative splits are tried.
    """
    return _existence(g, cap)[0]


def _existence(g: Graph, cap: int = DOMATIC_CAP) -> tuple[EdgePartition, list[str]]:
    _require_edges(g)
    if g.m > cap:
        raise SizeCapExceeded(f"existence construction limited to m <= {cap}")
    for domatic in domatic_partitions(g):
        found = _existence_from(g, list(domatic.classes))
        if found is not None:
            return found
    raise AssertionError("existence construction failed to produce an ec-partition")


def _existence_from(g: Graph, classes: list[int]) -> tuple[EdgePartition, list[str]] | None:
    notes: list[str] = []
    singles = [c for c in classes if c & (c - 1) == 0]
    multi = [c for c in classes if c & (c - 1)]
    if not multi:
        return EdgePartition(g.m, tuple(classes)), notes

    result: list[int] = []
    pooled = multi[-1]
    for c in multi[:-1]:
        core = shrink_mask(g, c)
        pooled |= c & ~core
        if core & (core - 1):
            result.extend(_split_in_two(core))
        else:
            result.append(core)
    core = shrink_mask(g, pooled)
    residue = pooled & ~core
    tail_single = core & (core - 1) == 0

    def assemble(halves: tuple[int, ...], res_mode: str) -> list[int] | None:
        parts = result + list(halves)
        if residue:
            if res_mode == "alone":
                parts = parts + [residue]
            else:
                idx = len(result) + (1 if res_mode == "second" else 0)
                if idx >= len(parts):
                    return None
                parts = parts.copy()
                parts[idx] |= residue
        parts += singles
        return parts

    if tail_single:
        candidates_halves = [(core,)]
    else:
        first, rest = _split_in_two(core)
        candidates_halves = [(first, rest)]
        members = list(bits_of(core))
        for r in range(1, len(members)):
            for combo in combinations(members[1:], r - 1):
                a = (1 << members[0]) | sum(1 << x for x in combo)
                if a != first and a != core:
                    candidates_halves.append((a, core & ~a))

    for attempt, halves in enumerate(candidates_halves):
        for mode in ("alone", "second", "first"):
            parts = assemble(halves, mode)
            if parts is not None and _is_ec(g, parts):
                if attempt or (residue and mode == "first"):
                    notes.append(f"existence: repaired (split #{attempt}, residue {mode})")
                return EdgePartition(g.m, tuple(parts)), notes
            if not residue:
                break

    # last resort: fold the residue into any class that keeps the partition valid
    base = result + list(candidates_halves[0]) + singles
    for i in range(len(base)):
        parts = base.copy()
        parts[i] |= residue
        if _is_ec(g, parts):
            notes.append(f"existence: residue folded into class {i}")
            return EdgePartition(g.m, tuple(parts)), notes
    return None


def delta_construction(g: Graph, search_cap: int = 4096) -> EdgePartition:
    """Order delta+1 partition around a minimum-degree vertex ``v``.

    Classes are the singletons {e_1}, ..., {e_k} of the edges at ``v`` plus
    E - N[e_1]. The edges of N[e_1] at the far end of e_1 still need a home;
    each is tried in every class until the partition validates. If no
    placement works they become singletons themselves, which is always an
    ec-partition (each singleton partners E - N[e_1]) of larger order.
    """
    if g.m == 0:
        raise NoEdges("graph has no edges")
    if g.full_edges:
        raise HasFullEdge(f"edge e{(g.full_edges & -g.full_edges).bit_length() - 1} is full")
    delta = g.min_degree()
    if delta < 1:
        raise NoEdges("minimum degree is 0")
    v = g.degrees.index(delta)
    incident = list(bits_of(g.incident[v]))
    e1 = incident[0]
    extra = list(bits_of(g.closed_nbhd[e1] & ~g.incident[v]))
    rest = g.full_mask & ~g.closed_nbhd[e1]
    base = [1 << e for e in incident] + [rest]
    if len(base) ** len(extra) <= search_cap:
        for assign in product(range(len(base)), repeat=len(extra)):
            classes = base.copy()
            for x, a in zip(extra, assign):
                classes[a] |= 1 << x
            if _is_ec(g, classes):
                return EdgePartition(g.m, tuple(classes)).canonical()
    classes = [1 << e for e in bits_of(g.closed_nbhd[e1])] + [rest]
    return EdgePartition(g.m, tuple(classes)).canonical()


def universal_construction(g: Graph) -> EdgePartition | None:
    """Singletons on edges at universal vertices plus the remaining edges as one class."""
    n = g.n
    universal = [v for v in range(n) if g.degrees[v] == n - 1]
    if not universal or g.m == n * (n - 1) // 2:
        return None
    at_universal = 0
    for v in universal:
        at_universal |= g.incident[v]
    rest = g.full_mask & ~at_universal
    classes = tuple(1 << e for e in bits_of(at_universal))
    if rest:
        classes += (rest,)
    return EdgePartition(g.m, classes)


def kr_s_construction(r: int, s: int) -> tuple[Graph, EdgePartition]:
    """K_{r,s} with each star slice into a right vertex split into {first edge} + rest."""
    if not 2 <= r <= s:
        raise InvalidFamilyParams("need 2 <= r <= s")
    g = complete_bipartite(r, s)
    classes = []
    for j in range(s):
        slice_ = [i * s + j for i in range(r)]
        classes.append(1 << slice_[0])
        classes.append(sum(1 << e for e in slice_[1:]))
    return g, EdgePartition(g.m, tuple(classes)).canonical()


def split_refinement(g: Graph, p: EdgePartition, max_class: int = 12) -> EdgePartition:
    """Greedy improvement: split a class in two while the partition stays valid."""
    classes = list(p.classes)
    improved = True
    while improved:
        improved = False
        for idx, c in enumerate(classes):
            members = list(bits_of(c))
            if len(members) < 2 or len(members) > max_class:
                continue
            head = members[0]
            for r in range(0, len(members) - 1):
                for combo in combinations(members[1:], r):
                    a = (1 << head) | sum(1 << x for x in combo)
                    trial = classes[:idx] + [a, c & ~a] + classes[idx + 1 :]
                    if _is_ec(g, trial):
                        classes = trial
                        improved = True
                        break
                if improved:
                    break
            if improved:
                break
    return EdgePartition(g.m, tuple(classes))


def ec_lower_bound(g: Graph, domatic_cap: int = DOMATIC_CAP) -> tuple[int, EdgePartition, list[tuple[str, int]]]:
    """Best validated constructive lower bound, its witness, and the trace."""
    _require_edges(g)
    candidates: list[tuple[str, EdgePartition]] = []

    if _is_ec(g, tuple(1 << i for i in range(g.m))):
        candidates.append(("singleton", EdgePartition.singletons(g.m)))

    stripped = g.without_isolated_vertices()
    if not stripped.full_edges:
        p = delta_construction(stripped)
        if _is_ec(g, p.classes):
            candidates.append(("delta", p))
        else:
            log.warning("delta construction failed to validate on %r", g)

    p = universal_construction(g)
    if p is not None:
        if _is_ec(g, p.classes):
            candidates.append(("universal", p))
        else:
            log.info("universal-vertex witness rejected on %r", g)

    if g.m <= domatic_cap:
        p = existence_partition(g, domatic_cap)
        candidates.append(("existence", p))

    if not candidates:
        # every edge full would have made the singleton partition valid
        p = existence_partition(g, max(domatic_cap, g.m))
        candidates.append(("existence", p))

    trace = [(f"lower:{name}", p.order) for name, p in candidates]
    name, best = max(candidates, key=lambda t: t[1].order)
    refined = split_refinement(g, best)
    if refined.order > best.order:
        trace.append(("lower:split-refinement", refined.order))
        best = refined
    return best.order, best, trace


# --- exact search --------------------------------------------------------------


class _Search:
    def __init__(self, g: Graph, cfg: SolverConfig, best: int, deadline: float | None):
        self.g = g
        self.cfg = cfg
        self.full = g.full_mask
        self.nb = g.closed_nbhd
        self.permissive = cfg.permissive
        forced = 0 if self.permissive else g.full_edges
        self.forced = forced
        self.base = bin(forced).count("1")
        self.order = [e for e in range(g.m) if not forced >> e & 1]
        M = len(self.order)
        self.M = M
        suffix = [0] * (M + 1)
        for i in range(M - 1, -1, -1):
            suffix[i] = suffix[i + 1] | self.nb[self.order[i]]
        self.cover_suffix = suffix
        self.best = best
        self.best_classes: tuple[int, ...] | None = None
        self.optima: list[tuple[int, ...]] = []
        self.nodes = 0
        self.deadline = deadline
        self.target: int | None = None  # stop as soon as this value is reached

    def _record(self, classes: list[int]) -> None:
        forced_singletons = [1 << e for e in bits_of(self.forced)]
        full = self._restore_order(classes, forced_singletons)
        value = len(full)
        if self.permissive and not classify(self.g, full, permissive=True).is_ec:
            return
        if value > self.best:
            self.best = value
            self.best_classes = full
            self.optima = [full]
        elif self.cfg.emit_all_optima and value == self.best:
            self.optima.append(full)

    def _restore_order(self, classes: list[int], singles: list[int]) -> tuple[int, ...]:
        # classes ordered by smallest member, matching RGS label order
        return tuple(sorted(classes + singles, key=lambda c: c & -c))

    def run(self, prefix_classes: list[int] | None = None, start: int = 0) -> None:
        classes = list(prefix_classes or [])
        covers = [self.g.cover(c) for c in classes]
        self._dfs(start, classes, covers)

    def _dfs(self, i: int, classes: list[int], covers: list[int]) -> bool:
        """Returns True to abort the whole search (target reached)."""
        self.nodes += 1
        if self.deadline is not None and not self.nodes & 1023 and time.perf_counter() > self.deadline:
            raise _Timeout
        full = self.full
        cu = self.cover_suffix[i]
        c = len(classes)
        remaining = self.M - i
        settled = full & ~cu
        permissive = self.permissive
        if remaining and settled and not permissive:
            if not any(cv & settled == settled for cv in covers):
                remaining = 0
        bound = self.base + c + remaining
        slack = self.cfg.emit_all_optima
        if bound < self.best or (bound == self.best and not slack):
            return False
        # every class must still be able to find a partner
        for x in range(c):
            need = full & ~covers[x]
            if permissive and (covers[x] | cu) == full:
                continue
            if need & ~cu == 0 and i < self.M:
                continue
            for y in range(c):
                if y != x and (covers[y] | cu) & need == need:
                    if permissive or covers[y] != full:
                        break
            else:
                return False
        if i == self.M:
            self._record(classes)
            return self.target is not None and self.best >= self.target
        e = self.order[i]
        bit, ne = 1 << e, self.nb[e]
        for j in range(c):
            cov = covers[j] | ne
            if cov == full and not permissive:
                continue
            old_c, old_cov = classes[j], covers[j]
            classes[j] = old_c | bit
            covers[j] = cov
            stop = self._dfs(i + 1, classes, covers)
            classes[j] = old_c
            covers[j] = old_cov
            if stop:
                return True
        classes.append(bit)
        covers.append(ne)
        stop = self._dfs(i + 1, classes, covers)
        classes.pop()
        covers.pop()
        return stop


class _Timeout(Exception):
    pass


def ec_exact(g: Graph, cfg: SolverConfig | None = None) -> EcResult:
    """Exact EC(g) with a validated certificate (the RGS-first optimum)."""
    cfg = cfg or SolverConfig()
    _require_edges(g)
    if g.m > cfg.max_edges:
        raise SizeCapExceeded(f"exact search limited to m <= {cfg.max_edges}, got m={g.m}")
    t0 = time.perf_counter()
    deadline = t0 + cfg.time_budget if cfg.time_budget else None

    hi, up_trace = ec_upper_bound(g)
    if cfg.permissive:
        lo, witness, lo_trace = 1, EdgePartition(g.m, (g.full_mask,)), [("lower:whole", 1)]
    else:
        lo, witness, lo_trace = ec_lower_bound(g, domatic_cap=min(DOMATIC_CAP, cfg.max_edges))
    trace = lo_trace + up_trace

    search = _Search(g, cfg, best=lo - 1, deadline=deadline)
    if not cfg.emit_all_optima and not cfg.permissive:
        search.target = hi
    try:
        if cfg.threads > 1 and not cfg.emit_all_optima:
            _parallel_search(search, cfg, lo, deadline)
        else:
            search.run()
    except _Timeout:
        elapsed = time.perf_counter() - t0
        best_lo = max(lo, search.best)
        part = witness
        if search.best_classes is not None and search.best >= lo:
            part = EdgePartition(g.m, search.best_classes)
        raise TimeBudgetExceeded(best_lo, hi, part, elapsed) from None

    if search.best_classes is None:
        if cfg.permissive:
            raise AssertionError("permissive search found no partition")
        # the witness order is optimal but the search pruned at equality
        search.best_classes = witness.classes
        search.best = lo
    cert = EdgePartition(g.m, search.best_classes)
    verdict = classify(g, cert.classes, permissive=cfg.permissive)
    if not verdict.is_ec or cert.order != search.best:
        raise AssertionError("solver produced an invalid certificate")
    if not cfg.permissive and not lo <= search.best <= hi:
        raise AssertionError(f"bound sandwich violated: {lo} <= {search.best} <= {hi}")
    trace.append(("exact", search.best))
    optima = [EdgePartition(g.m, c) for c in search.optima] if cfg.emit_all_optima else None
    return EcResult(search.best, cert, trace, search.nodes, time.perf_counter() - t0, optima)


def _parallel_search(search: _Search, cfg: SolverConfig, lo: int, deadline: float | None) -> None:
    """Split on the assignment of the first few edges and search subtrees in processes.

    Every subtree starts from the same incumbent, so each reports its own
    RGS-first optimum and the earliest subtree attaining the maximum gives
    the same certificate as the sequential search.
    """
    from concurrent.futures import ProcessPoolExecutor

    depth = min(search.M, 4)
    prefixes: list[list[int]] = []

    def gen(i: int, classes: list[int]) -> None:
        if i == depth:
            prefixes.append(list(classes))
            return
        bit = 1 << search.order[i]
        for j in range(len(classes)):
            classes[j] |= bit
            gen(i + 1, classes)
            classes[j] &= ~bit
        classes.append(bit)
        gen(i + 1, classes)
        classes.pop()

    gen(0, [])
    timeout = None if deadline is None else max(0.0, deadline - time.perf_counter())
    jobs = [(search.g, cfg, lo - 1, timeout, pre, depth) for pre in prefixes]
    with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
        results = list(pool.map(_subtree_worker, jobs))
    for best, classes, nodes, timed_out in results:
        search.nodes += nodes
        if timed_out:
            raise _Timeout
        if classes is not None and best > search.best:
            search.best, search.best_classes = best, classes


def _subtree_worker(job):
    g, cfg, best, timeout, prefix, depth = job
    deadline = None if timeout is None else time.perf_counter() + timeout
    s = _Search(g, cfg, best, deadline)
    try:
        s.run(prefix, depth)
    except _Timeout:
        return s.best, s.best_classes, s.nodes, True
    return s.best, s.best_classes, s.nodes, False
