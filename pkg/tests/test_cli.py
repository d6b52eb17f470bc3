from __future__ import annotations

import io
import json

import pytest

from ec_kit.cli import main, parse_partition_text
from ec_kit.graph import complete_bipartite
from ec_kit.graphio import parse_graph6, write_graph6


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ec_family(capsys):
    code, out, _ = run(capsys, "ec", "--family", "path:6")
    assert code == 0 and out.splitlines()[0] == "EC = 4"


def test_ec_cycle_and_inline(capsys):
    assert run(capsys, "ec", "--family", "cycle:5")[1].startswith("EC = 5")
    assert run(capsys, "ec", "--edges", "3: 0-1,1-2")[1].startswith("EC = 2")


def test_ec_json_shape(capsys):
    code, out, _ = run(capsys, "ec", "--family", "path:6", "--json")
    data = json.loads(out)
    assert list(data) == ["key", "n", "m", "connected", "ec_lo", "ec_hi", "certificate", "checks"]
    assert data["ec_lo"] == 4


def test_ec_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "ec", stdin="Dhc\n", monkeypatch=monkeypatch)
    assert code == 0 and out.startswith("EC = 5")


def test_ec_budget_exhausted(capsys):
    code, out, _ = run(capsys, "ec", "--family", "complete:7", "--budget", "0.3")
    assert code == 1 and out.startswith("EC in [")


def test_two_sources_is_usage_error(capsys):
    code, _, err = run(capsys, "ec", "--family", "path:6", "--edges", "2: 0-1")
    assert code == 2 and "exactly one" in err


def test_certify(capsys):
    code, out, _ = run(capsys, "certify", "--family", "path:6", "--classes", "0,4;1;2;3")
    assert code == 0 and "is_ec: true" in out
    code, out, err = run(capsys, "certify", "--family", "path:6", "--classes", "0;1;2;3;4")
    assert code == 1 and "orphan: class 2" in err
    code, _, err = run(capsys, "certify", "--family", "path:6", "--classes", "0,1;1;2;3;4")
    assert code == 2 and "NotAPartition" in err


def test_certify_partition_file(capsys, tmp_path):
    f = tmp_path / "p.json"
    f.write_text("[[0, 4], [1], [2], [3]]")
    code, out, _ = run(capsys, "certify", "--family", "path:6", "--partition", str(f), "--json")
    assert code == 0 and json.loads(out)["is_ec"]


def test_ecg(capsys):
    code, out, _ = run(capsys, "ecg", "--family", "kb:2,4", "--classes", "0;1;2;3;4;5;6;7")
    g = parse_graph6(out.strip())
    assert code == 0 and g.n == 8 and g.m == 16
    code, out, _ = run(capsys, "ecg", "--family", "star:4", "--classes", "0;1;2;3", "--dot")
    assert code == 0 and "--" not in out
    code, _, _ = run(capsys, "ecg", "--family", "path:6", "--classes", "0;1;2;3;4")
    assert code == 1


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "--family", "path:13")
    assert code == 0 and len(out.splitlines()) == 1
    code, out, _ = run(capsys, "gen", "--all-upto", "5")
    assert len(out.splitlines()) == 1 + 2 + 4 + 11 + 34  # n = 1..5
    code, _, _ = run(capsys, "gen", "--family", "bogus:3")
    assert code == 2


def test_verify_missing_graphs(capsys):
    code, _, _ = run(capsys, "verify", "--suite", "sweep", "--graphs", "does-not-exist.g6")
    assert code == 2


def test_verify_sweep(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("\n".join(write_graph6(g) for g in (complete_bipartite(2, 2),)) + "\nDhc\n")
    code, out, _ = run(capsys, "verify", "--suite", "sweep", "--graphs", str(f), "--out", str(tmp_path / "o"))
    assert code == 0
    assert len((tmp_path / "o" / "sweep.jsonl").read_text().splitlines()) == 2
    assert "certificate_valid" in out


def test_verify_ecg(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "ecg")
    assert code == 0 and "PASS K2,4 pi6" in out


def test_parse_partition_text():
    assert parse_partition_text("0 4\n1\n2\n3\n", 5).order == 4
    assert parse_partition_text("0,4;1;2;3", 5).order == 4
    with pytest.raises(ValueError):
        parse_partition_text("0;0", 1)
