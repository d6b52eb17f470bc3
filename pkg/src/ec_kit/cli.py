"""Command-line front end: ec, certify, ecg, verify, gen.

Exit codes: 0 success, 1 computation error (budget exhausted, invalid
partition, failed assert-severity check), 2 usage error (bad input).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .canon import key_hex
from .coalition import build_ecg, validate_partition
from .errors import (
    EcKitError,
    GraphError,
    MismatchedGraph,
    NotAPartition,
    NotAnEcPartition,
    OverlappingSets,
    SizeCapExceeded,
    TimeBudgetExceeded,
)
from .generate import all_graphs_upto
from .graph import EdgePartition, Graph, parse_family_spec
from .graphio import load_graph_source, parse_inline_edges, read_graph6_lines, to_dot, write_graph6
from .solver import SolverConfig, ec_exact

log = logging.getLogger("ec_kit")

EXIT_OK, EXIT_COMPUTE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _default_threads() -> int:
    raw = os.environ.get("EC_KIT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# --- input handling ---------------------------------------------------------------


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("input (exactly one; default: graph6 lines on stdin)")
    src.add_argument("graph_file", nargs="?", help="graph6 file or edge-list file")
    src.add_argument("--family", help='family spec such as "path:6", "kb:2,4", "dstar:2,3"')
    src.add_argument("--edges", help='inline edge list such as "3: 0-1,1-2"')


def _read_graphs(args: argparse.Namespace) -> list[Graph]:
    given = [x for x in (args.graph_file, args.family, args.edges) if x is not None]
    if len(given) > 1:
        raise UsageError("give exactly one input source")
    if args.family is not None:
        return [parse_family_spec(args.family)]
    if args.edges is not None:
        return [parse_inline_edges(args.edges)]
    if args.graph_file is not None:
        path = Path(args.graph_file)
        if not path.is_file():
            raise UsageError(f"no such file: {path}")
        return load_graph_source(path)
    graphs = list(read_graph6_lines(sys.stdin.read().splitlines()))
    if not graphs:
        raise UsageError("no graph on stdin")
    return graphs


def _single_graph(args: argparse.Namespace) -> Graph:
    graphs = _read_graphs(args)
    if len(graphs) != 1:
        raise UsageError(f"expected one graph, got {len(graphs)}")
    return graphs[0]


def parse_partition_text(text: str, m: int) -> EdgePartition:
    """Classes from JSON ([[0,4],[1],...]), "0,4;1;2", or one class per line."""
    text = text.strip()
    if text.startswith("["):
        classes = json.loads(text)
    else:
        chunks = text.split(";") if ";" in text else text.splitlines()
        classes = [[int(tok) for tok in chunk.replace(",", " ").split()] for chunk in chunks if chunk.strip()]
    return EdgePartition.from_lists(m, classes)


def _read_partition(args: argparse.Namespace, m: int) -> EdgePartition:
    if (args.partition is None) == (args.classes is None):
        raise UsageError("give exactly one of --partition FILE or --classes SPEC")
    if args.partition is not None:
        path = Path(args.partition)
        if not path.is_file():
            raise UsageError(f"no such file: {path}")
        text = path.read_text()
    else:
        text = args.classes
    try:
        return parse_partition_text(text, m)
    except (ValueError, json.JSONDecodeError) as exc:
        if isinstance(exc, EcKitError):
            raise
        raise UsageError(f"cannot parse partition: {exc}") from None


def _class_text(g: Graph, mask_list: list[int]) -> str:
    return ", ".join(f"e{i} {g.edges[i]}" for i in mask_list)


# --- subcommands --------------------------------------------------------------------


def cmd_ec(args: argparse.Namespace) -> int:
    status = EXIT_OK
    for g in _read_graphs(args):
        cfg = SolverConfig(
            max_edges=args.max_edges,
            time_budget=args.budget,
            threads=args.threads,
            permissive=args.permissive,
        )
        try:
            res = ec_exact(g, cfg)
            lo = hi = res.value
            cert = res.certificate
        except TimeBudgetExceeded as exc:
            lo, hi, cert = exc.lo, exc.hi, exc.partition
            status = EXIT_COMPUTE
        if args.json:
            record = {
                "key": key_hex(g, max(10, g.n)),
                "n": g.n,
                "m": g.m,
                "connected": g.is_connected(),
                "ec_lo": lo,
                "ec_hi": hi,
                "certificate": cert.as_lists() if cert is not None else [],
                "checks": {},
            }
            print(json.dumps(record, separators=(",", ":")))
            continue
        if lo == hi:
            print(f"EC = {lo}")
        else:
            print(f"EC in [{lo}, {hi}] (time budget exhausted)")
        if cert is not None:
            for k, cls in enumerate(cert.as_lists()):
                print(f"  class {k}: {_class_text(g, cls)}")
    return status


def cmd_certify(args: argparse.Namespace) -> int:
    g = _single_graph(args)
    p = _read_partition(args, g.m)
    verdict = validate_partition(g, p, permissive=args.permissive)
    if args.json:
        print(json.dumps({
            "is_ec": verdict.is_ec,
            "classes": [
                {"edges": cls, "status": s.kind.value, "partners": list(s.partners)}
                for cls, s in zip(p.as_lists(), verdict.class_status)
            ],
        }))
    else:
        for k, (cls, s) in enumerate(zip(p.as_lists(), verdict.class_status)):
            print(f"class {k} [{_class_text(g, cls)}]: {s.describe()}")
        print(f"is_ec: {str(verdict.is_ec).lower()}")
    if not verdict.is_ec:
        print(f"orphan: class {verdict.orphans()[0]}", file=sys.stderr)
        return EXIT_COMPUTE
    return EXIT_OK


def cmd_ecg(args: argparse.Namespace) -> int:
    g = _single_graph(args)
    p = _read_partition(args, g.m)
    ecg = build_ecg(g, p).graph
    if args.dot:
        print(to_dot(ecg, "ECG", edge_labels=False))
    else:
        print(write_graph6(ecg))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if (args.family is None) == (args.all_upto is None):
        raise UsageError("give exactly one of --family or --all-upto")
    if args.family is not None:
        print(write_graph6(parse_family_spec(args.family)))
        return EXIT_OK
    if not 1 <= args.all_upto <= 8:
        raise UsageError("--all-upto must be between 1 and 8")
    for g in all_graphs_upto(args.all_upto, connected=args.connected):
        print(write_graph6(g))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    from .verifier import (
        AssertCheckFailed,
        RecordStore,
        SweepConfig,
        report,
        rows_to_csv,
        run_family_suite,
        sweep,
        verify_ecg_catalog,
    )

    out = Path(args.out) if args.out else None
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
    suites = ("family", "sweep", "ecg") if args.suite == "all" else (args.suite,)
    graphs_lines: list[str] | None = None
    if "sweep" in suites:
        if args.graphs is None:
            raise UsageError("--suite sweep needs --graphs FILE")
        path = Path(args.graphs)
        if not path.is_file():
            raise UsageError(f"no such file: {path}")
        graphs_lines = [ln for ln in path.read_text().splitlines() if ln.strip()]
    status = EXIT_OK

    if "family" in suites:
        rows = run_family_suite(budget=args.budget)
        text = rows_to_csv(rows)
        if out is not None:
            (out / "family.csv").write_text(text)
        sys.stdout.write(text)

    if "sweep" in suites:
        store = RecordStore(out / "sweep.jsonl") if out is not None else None
        cfg = SweepConfig(time_budget=args.budget, max_edges=args.max_edges, threads=args.threads)
        try:
            records = list(sweep(graphs_lines, cfg=cfg, store=store))
        except AssertCheckFailed as exc:
            print(f"assert-severity failure: {exc}", file=sys.stderr)
            return EXIT_COMPUTE
        if store is not None:
            records = store.load()
        rep = report(records)
        print(rep.text())
        if out is not None:
            (out / "discrepancies.json").write_text(rep.discrepancy_json() + "\n")
        if rep.assert_failures:
            status = EXIT_COMPUTE

    if "ecg" in suites:
        cat = verify_ecg_catalog()
        print(cat.summary())
        if out is not None:
            (out / "ecg.txt").write_text(cat.summary() + "\n")
        if not cat.passed:
            log.warning("coalition-graph catalog has failing items")
    return status


# --- entry point -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ec-kit", description="Edge coalition number toolkit")
    parser.add_argument("-v", "--verbose", action="store_true", help="log to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ec", help="exact edge coalition number with a certificate")
    _add_input(p)
    p.add_argument("--budget", type=float, default=None, help="time budget in seconds")
    p.add_argument("--max-edges", type=int, default=24)
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--permissive", action="store_true", help="allow non-singleton dominating classes")
    p.add_argument("--json", action="store_true", help="print the sweep-record shape")
    p.set_defaults(func=cmd_ec)

    for name, func, helptext in (
        ("certify", cmd_certify, "check a partition is an ec-partition"),
        ("ecg", cmd_ecg, "coalition graph of an ec-partition"),
    ):
        p = sub.add_parser(name, help=helptext)
        _add_input(p)
        p.add_argument("--partition", help="file: JSON list of lists, or one class per line")
        p.add_argument("--classes", help='inline classes such as "0,4;1;2;3"')
        if name == "certify":
            p.add_argument("--permissive", action="store_true")
            p.add_argument("--json", action="store_true")
        else:
            fmt = p.add_mutually_exclusive_group()
            fmt.add_argument("--dot", action="store_true")
            fmt.add_argument("--graph6", action="store_true", help="default")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=("family", "sweep", "ecg", "all"), default="family")
    p.add_argument("--graphs", help="graph6 file for the sweep suite")
    p.add_argument("--out", help="output directory for CSV / JSONL / reports")
    p.add_argument("--budget", type=float, default=60.0, help="per-graph time budget in seconds")
    p.add_argument("--max-edges", type=int, default=24)
    p.add_argument("--threads", type=int, default=_default_threads())
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="print graph6 lines")
    p.add_argument("--family")
    p.add_argument("--all-upto", type=int)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, NotAPartition, OverlappingSets, MismatchedGraph) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotAnEcPartition, SizeCapExceeded, EcKitError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
