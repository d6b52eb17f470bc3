from __future__ import annotations

import json

import pytest

from ec_kit.generate import all_graphs_upto
from ec_kit.graph import complete_bipartite, cycle, path
from ec_kit.graphio import write_graph6
from ec_kit.verifier import (
    AssertCheckFailed,
    CheckDefinition,
    CheckRegistry,
    RecordStore,
    Severity,
    SweepConfig,
    SweepRecord,
    characterize_ec_equals_m,
    compare_with_textual,
    default_registry,
    report,
    rows_to_csv,
    sweep,
    verify_ecg_catalog,
)
from ec_kit.verifier.catalog import check_k24, check_stars, k24_partition
from ec_kit.verifier.families import FamilyRow, describe, subdivided_double_star
from ec_kit.verifier.sweep import RECORD_FIELDS, evaluate_graph

GRAPHS5 = all_graphs_upto(5)


def test_record_field_order_frozen():
    rec = evaluate_graph(path(6), default_registry(), SweepConfig())
    data = json.loads(rec.to_json())
    assert tuple(data) == RECORD_FIELDS
    assert data["ec_lo"] == data["ec_hi"] == 4
    assert SweepRecord.from_json(rec.to_json()) == rec
    assert set(data["checks"]) == set(default_registry().names())


def test_sweep_order_and_edgeless_graphs():
    recs = list(sweep(GRAPHS5))
    assert len(recs) == len(GRAPHS5)
    assert [r.n for r in recs] == [g.n for g in GRAPHS5]
    empty = [r for r in recs if r.m == 0]
    assert empty and all(r.ec_lo is None for r in empty)
    assert all(v.startswith("skipped") for v in empty[0].checks.values())


def test_sweep_deterministic():
    a = [r.to_json() for r in sweep(GRAPHS5[:20])]
    b = [r.to_json() for r in sweep(GRAPHS5[:20])]
    assert a == b


def test_resume(tmp_path):
    full = [r.to_json() for r in sweep(GRAPHS5)]
    store = RecordStore(tmp_path / "run.jsonl")
    it = sweep(GRAPHS5, store=store)
    for _ in range(7):
        next(it)
    it.close()
    rest = list(sweep(GRAPHS5, store=store))
    assert len(rest) == len(GRAPHS5) - 7
    assert sorted(r.to_json() for r in store.load()) == sorted(full)


def test_torn_line_ignored(tmp_path):
    f = tmp_path / "run.jsonl"
    store = RecordStore(f)
    list(sweep(GRAPHS5[:3], store=store))
    with f.open("a") as fh:
        fh.write('{"key": "tor')
    assert len(store.load()) == 3


def test_assert_failure_aborts_with_reproducer():
    bogus = CheckDefinition("always_fails", "any", lambda g: None, lambda ctx: False, Severity.ASSERT)
    reg = CheckRegistry([bogus])
    with pytest.raises(AssertCheckFailed) as info:
        list(sweep([path(4)], registry=reg))
    assert info.value.graph6 == write_graph6(path(4))
    assert info.value.certificate == [[0], [1], [2]]


def test_report_counts_and_discrepancies():
    recs = list(sweep(GRAPHS5))
    rep = report(recs)
    assert not rep.assert_failures
    assert rep.counts["certificate_valid"]["pass"] == sum(1 for r in recs if r.m)
    text = rep.text()
    assert "certificate_valid" in text
    json.loads(rep.discrepancy_json())


def test_interval_records():
    g = complete_bipartite(4, 4)
    rec = evaluate_graph(g, default_registry(), SweepConfig(time_budget=0.05))
    assert rec.ec_lo <= rec.ec_hi
    assert rec.checks["certificate_valid"] == "pass"


def test_characterize_trees_small():
    keys = characterize_ec_equals_m(5, "tree")
    # P2, P3, P4, K1,3, P5, K1,4, S(2,1)
    assert len(keys) == 7
    cmp = compare_with_textual(8, "tree")
    assert cmp.agrees


def test_unicyclic_readings():
    fig = compare_with_textual(8, "unicyclic", "figure")
    assert fig.agrees
    text = compare_with_textual(8, "unicyclic", "text")
    assert text.missing


def test_c6_pendant_excluded():
    from ec_kit.canon import canonical_key
    from ec_kit.graph import make_graph

    g = make_graph(7, list(cycle(6).edges) + [(0, 6)])
    assert canonical_key(g).hex() not in characterize_ec_equals_m(7, "unicyclic")


def test_characterize_cap():
    from ec_kit.errors import SizeCapExceeded

    with pytest.raises(SizeCapExceeded):
        characterize_ec_equals_m(9, "tree")


def test_subdivided_double_star_shape():
    g = subdivided_double_star(1, 1)
    assert g.n == 5 and sorted(g.degrees) == [1, 1, 2, 2, 2]


def test_describe():
    from ec_kit.graph import disjoint_union

    assert describe(disjoint_union(path(2), path(2))) == "2K2"
    assert describe(path(3)) == "P3"
    assert describe(disjoint_union(path(2), path(3))) == "K2 + P3"


def test_catalog_parts():
    assert all(item.passed for item in check_k24())
    assert all(item.passed for item in check_stars(6))
    assert k24_partition("pi6").order == 4


def test_catalog_report():
    rep = verify_ecg_catalog(star_max=5, unicyclic_max=6, self_max=6)
    assert rep.passed
    assert len(rep.self_coalition) == 2
    assert "self-edge-coalition" in rep.summary()


def test_rows_to_csv():
    text = rows_to_csv([FamilyRow("path", "6", "= 4", "4", True)])
    assert text.splitlines() == ["family,param,expected,computed,pass", "path,6,= 4,4,pass"]
