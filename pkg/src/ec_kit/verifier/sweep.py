"""Sweeps: run the solver and the registered checks over a graph stream."""

from __future__ import annotations

import json
import logging
import os
from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from ..canon import key_hex
from ..errors import EcKitError, TimeBudgetExceeded
from ..graph import EdgePartition, Graph
from ..graphio import parse_graph6, write_graph6
from ..solver import SolverConfig, ec_exact
from .checks import CheckContext, CheckRegistry, Severity, default_registry

log = logging.getLogger(__name__)

RECORD_FIELDS = ("key", "n", "m", "connected", "ec_lo", "ec_hi", "certificate", "checks")


@dataclass
class SweepRecord:
    key: str
    n: int
    m: int
    connected: bool
    ec_lo: int | None
    ec_hi: int | None
    certificate: list[list[int]]
    checks: dict[str, str] = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return self.ec_lo is not None and self.ec_lo == self.ec_hi

    def to_json(self) -> str:
        payload = OrderedDict((f, getattr(self, f)) for f in RECORD_FIELDS)
        return json.dumps(payload, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> SweepRecord:
        data = json.loads(line)
        if tuple(data) != RECORD_FIELDS:
            raise ValueError(f"unexpected record fields {list(data)}")
        return cls(**data)

    def partition(self) -> EdgePartition:
        return EdgePartition.from_lists(self.m, self.certificate)


class AssertCheckFailed(EcKitError):
    """An assert-severity check failed; carries a reproducer."""

    def __init__(self, check: str, graph6: str, certificate: list[list[int]]):
        self.check = check
        self.graph6 = graph6
        self.certificate = certificate
        super().__init__(f"{check} failed; reproducer: graph6={graph6} certificate={certificate}")


@dataclass(frozen=True)
class SweepConfig:
    time_budget: float | None = 30.0
    max_edges: int = 24
    threads: int = 1
    abort_on_assert: bool = True


def evaluate_graph(g: Graph, registry: CheckRegistry, cfg: SweepConfig) -> SweepRecord:
    """Solve one graph and evaluate every check; errors land in the record."""
    key = key_hex(g, max(10, g.n))
    base = dict(key=key, n=g.n, m=g.m, connected=g.is_connected())
    if g.m == 0:
        return SweepRecord(**base, ec_lo=None, ec_hi=None, certificate=[],
                           checks={c: "skipped(no edges)" for c in registry.names()})
    if g.m > cfg.max_edges:
        return SweepRecord(**base, ec_lo=None, ec_hi=None, certificate=[],
                           checks={c: f"skipped(m > {cfg.max_edges})" for c in registry.names()})
    try:
        res = ec_exact(g, SolverConfig(max_edges=cfg.max_edges, time_budget=cfg.time_budget))
        lo = hi = res.value
        cert = res.certificate
    except TimeBudgetExceeded as exc:
        lo, hi, cert = exc.lo, exc.hi, exc.partition
    except EcKitError as exc:
        return SweepRecord(**base, ec_lo=None, ec_hi=None, certificate=[],
                           checks={c: f"skipped(error: {type(exc).__name__})" for c in registry.names()})
    ctx = CheckContext(g, lo, hi, cert)
    return SweepRecord(**base, ec_lo=lo, ec_hi=hi, certificate=cert.as_lists(),
                       checks=registry.evaluate(ctx))


def _worker(args: tuple[str, CheckRegistry | None, SweepConfig]) -> SweepRecord:
    line, registry, cfg = args
    return evaluate_graph(parse_graph6(line), registry or default_registry(), cfg)


class RecordStore:
    """Append-only JSON-lines file; one writer, resume by canonical key."""

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)

    def load(self) -> list[SweepRecord]:
        if not self.path.exists():
            return []
        out = []
        with self.path.open() as fh:
            for line in fh:
                line = line.strip()
                if line:
                    try:
                        out.append(SweepRecord.from_json(line))
                    except (ValueError, TypeError):
                        # a torn final line from an interrupted run
                        log.warning("ignoring unreadable record line in %s", self.path)
        return out

    def done_keys(self) -> set[str]:
        return {r.key for r in self.load()}

    def append(self, rec: SweepRecord) -> None:
        with self.path.open("a") as fh:
            fh.write(rec.to_json() + "\n")
            fh.flush()


def _lines(graphs: Iterable[Graph | str]) -> Iterator[str]:
    for g in graphs:
        yield g if isinstance(g, str) else write_graph6(g)


def sweep(
    graphs: Iterable[Graph | str],
    registry: CheckRegistry | None = None,
    cfg: SweepConfig | None = None,
    store: RecordStore | None = None,
) -> Iterator[SweepRecord]:
    """Yield one record per input graph, in input order.

    With a store, records whose key is already persisted are skipped and new
    ones appended as they are produced, so an interrupted sweep resumes.
    """
    cfg = cfg or SweepConfig()
    custom = registry
    registry = registry or default_registry()
    done = store.done_keys() if store else set()

    pending: list[str] = []
    for line in _lines(graphs):
        line = line.strip()
        if not line or line.startswith(">>"):
            continue
        if done and key_hex(parse_graph6(line), 64) in done:
            continue
        pending.append(line)

    if cfg.threads > 1 and custom is not None:
        raise ValueError("custom check registries run single-threaded")
    if cfg.threads > 1:
        pool = ProcessPoolExecutor(max_workers=cfg.threads)
        results: Iterable[SweepRecord] = pool.map(_worker, [(ln, custom, cfg) for ln in pending], chunksize=4)
    else:
        pool = None
        results = (evaluate_graph(parse_graph6(ln), registry, cfg) for ln in pending)
    try:
        for line, rec in zip(pending, results):
            if store:
                store.append(rec)
            if cfg.abort_on_assert:
                _raise_on_assert(rec, registry, line)
            yield rec
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)


def _raise_on_assert(rec: SweepRecord, registry: CheckRegistry, line: str) -> None:
    for check in registry.checks:
        if check.severity is Severity.ASSERT and rec.checks.get(check.name) == "fail":
            raise AssertCheckFailed(check.name, line, rec.certificate)
