from __future__ import annotations

import pytest
from conftest import graphs
from hypothesis import assume, given, settings
from oracles import dominates, edge_domatic_number as domatic_oracle, minimal_dominating_sets

from ec_kit.domination import (
    _domatic_assignment,
    _domatic_packing,
    check_edge_dominating,
    edge_domatic_number,
    edge_domatic_upper_bound,
    edge_domination_number,
    enumerate_minimal_eds,
    shrink_to_minimal,
)
from ec_kit.errors import EmptyEdgeSet, MismatchedGraph, NotDominating, SizeCapExceeded
from ec_kit.graph import EdgeSet, complete, cycle, make_graph, path


def test_middle_edge_dominates_p4():
    g = path(4)
    rep = check_edge_dominating(g, EdgeSet.of(3, [1]))
    assert rep.dominating and not rep.undominated


def test_undominated_edges_reported():
    g = path(6)
    rep = check_edge_dominating(g, EdgeSet.of(5, [0]))
    assert not rep.dominating
    assert rep.undominated.indices() == [2, 3, 4]


def test_errors():
    with pytest.raises(EmptyEdgeSet):
        check_edge_dominating(make_graph(3, []), EdgeSet.of(0, []))
    with pytest.raises(MismatchedGraph):
        check_edge_dominating(path(4), EdgeSet.of(5, [0]))
    with pytest.raises(NotDominating):
        shrink_to_minimal(path(6), EdgeSet.of(5, [0]))
    with pytest.raises(SizeCapExceeded):
        enumerate_minimal_eds(complete(7), cap=20)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_domination_matches_oracle(g, h):
    assume(g.m > 0)
    chosen = {i for i in range(g.m) if (h.m >> (i % 3)) & 1 or i % (h.n + 2) == 0}
    rep = check_edge_dominating(g, EdgeSet.of(g.m, chosen))
    assert rep.dominating == dominates(list(g.edges), chosen)


def test_minimal_eds_p4():
    assert [s.indices() for s in enumerate_minimal_eds(path(4))] == [[1], [0, 2]]


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6, max_m=9))
def test_minimal_eds_matches_oracle(g):
    assume(g.m > 0)
    got = {frozenset(s.indices()) for s in enumerate_minimal_eds(g)}
    assert got == minimal_dominating_sets(g)


def test_shrink_removes_highest_first():
    g = path(4)
    assert shrink_to_minimal(g, EdgeSet.of(3, [0, 1, 2])).indices() == [1]
    assert shrink_to_minimal(path(5), EdgeSet.of(4, [0, 1, 2, 3])).indices() == [0, 2]


def test_edge_domatic_examples():
    assert edge_domatic_number(cycle(4))[0] == 2
    assert edge_domatic_number(path(2))[0] == 1
    k, p = edge_domatic_number(complete(4))
    assert all(check_edge_dominating(complete(4), cls).dominating for cls in p)
    assert k == p.order


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=6, max_m=8))
def test_edge_domatic_matches_line_graph_oracle(g):
    assume(g.m > 0)
    k, p = edge_domatic_number(g)
    assert k == domatic_oracle(g)
    assert all(dominates(list(g.edges), set(cls.indices())) for cls in p)


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=6, max_m=8))
def test_packing_and_colouring_searches_agree(g):
    assume(g.m > 0)
    gamma = edge_domination_number(g)
    minimal = [d.bits for d in enumerate_minimal_eds(g)]
    for k in range(1, 5):
        packed = _domatic_packing(g, k, gamma, minimal)
        coloured = _domatic_assignment(g, k, gamma)
        assert (packed is None) == (coloured is None)
        if packed is not None:
            assert all(dominates(list(g.edges), {e for e in range(g.m) if packed[e] == c}) for c in range(k))


def test_dense_refutation_uses_packing():
    # the colouring search alone needs far more than its node budget here
    g = make_graph(7, [(0, 3), (0, 4), (0, 5), (0, 6), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4),
                       (2, 5), (2, 6), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)])
    assert edge_domatic_upper_bound(g) == 9
    assert edge_domatic_number(g, cap=18)[0] == 7
