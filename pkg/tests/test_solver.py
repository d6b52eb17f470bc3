from __future__ import annotations

import pytest
from conftest import graphs
from hypothesis import assume, given, settings
from oracles import ec_number, is_ec_partition

from ec_kit.coalition import is_ec_partition as is_ec
from ec_kit.errors import (
    EmptyEdgeSet,
    HasFullEdge,
    InvalidFamilyParams,
    NoEdges,
    SizeCapExceeded,
    TimeBudgetExceeded,
)
from ec_kit.graph import (
    EdgePartition,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    double_star,
    make_graph,
    path,
    star,
)
from ec_kit.solver import (
    SolverConfig,
    delta_construction,
    ec_exact,
    ec_lower_bound,
    ec_upper_bound,
    existence_partition,
    kr_s_construction,
    universal_construction,
)


@pytest.mark.parametrize(
    "g, value",
    [
        (path(2), 1),
        (path(3), 2),
        (path(4), 3),
        (path(6), 4),
        (cycle(5), 5),
        (star(5), 5),
        (complete(4), 6),
        (double_star(2, 3), 6),
        (disjoint_union(path(2), path(2)), 2),
    ],
)
def test_known_values(g, value):
    res = ec_exact(g)
    assert res.value == value
    assert is_ec(g, res.certificate)
    assert res.certificate.order == value


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6, max_m=7))
def test_exact_matches_oracle(g):
    assume(g.m > 0)
    res = ec_exact(g)
    assert res.value == ec_number(g)
    assert is_ec_partition(list(g.edges), res.certificate.as_lists())


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7, max_m=10))
def test_bounds_sandwich(g):
    assume(g.m > 0)
    lo, witness, _ = ec_lower_bound(g)
    hi, _ = ec_upper_bound(g)
    value = ec_exact(g).value
    assert lo <= value <= hi <= g.m
    assert witness.order == lo and is_ec(g, witness)


def test_certificate_is_first_in_rgs_order():
    # P6 has several order-4 ec-partitions; the RGS-first one is returned
    res = ec_exact(path(6))
    assert res.certificate.as_lists() == [[0, 2], [1], [3], [4]]
    res_all = ec_exact(path(6), SolverConfig(emit_all_optima=True))
    labels = [tuple(p.labels()) for p in res_all.all_optima]
    assert tuple(res.certificate.labels()) == min(labels)
    assert all(is_ec(path(6), p) and p.order == 4 for p in res_all.all_optima)


def test_deterministic_with_threads():
    g = cycle(9)
    a = ec_exact(g)
    b = ec_exact(g, SolverConfig(threads=2))
    assert a.value == b.value
    assert a.certificate == b.certificate


def test_errors():
    with pytest.raises(EmptyEdgeSet):
        ec_exact(make_graph(3, []))
    with pytest.raises(SizeCapExceeded):
        ec_exact(complete(7), SolverConfig(max_edges=20))
    with pytest.raises(TimeBudgetExceeded) as info:
        ec_exact(complete(7), SolverConfig(time_budget=0.2))
    exc = info.value
    assert exc.lo <= exc.hi
    assert is_ec(complete(7), exc.partition) and exc.partition.order == exc.lo


def test_permissive_reading_never_smaller():
    for g in (path(4), path(5), cycle(6), complete(4), double_star(1, 2)):
        strict = ec_exact(g).value
        loose = ec_exact(g, SolverConfig(permissive=True)).value
        assert loose >= strict


def test_existence_partition_valid_and_beats_domatic():
    for g in (path(6), cycle(7), complete(5), complete_bipartite(3, 3), double_star(2, 2)):
        p = existence_partition(g)
        assert is_ec(g, p)


def test_delta_construction():
    p = delta_construction(cycle(6))
    assert p.order == 3 and is_ec(cycle(6), p)
    g = complete_bipartite(3, 3)
    p = delta_construction(g)
    assert p.order == 4 and is_ec(g, p)
    p = delta_construction(complete(4))
    assert p.order >= 4 and is_ec(complete(4), p)
    with pytest.raises(HasFullEdge):
        delta_construction(path(3))
    with pytest.raises(NoEdges):
        delta_construction(make_graph(2, []))


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=2, max_n=7))
def test_delta_construction_always_valid(g):
    g = g.without_isolated_vertices()
    assume(g.m > 0 and not g.full_edges)
    p = delta_construction(g)
    assert is_ec(g, p)
    assert p.order >= g.min_degree() + 1


def test_universal_construction_p3():
    p = universal_construction(path(3))
    assert p is not None and p.order == 2
    assert universal_construction(complete(4)) is None


@pytest.mark.parametrize("r, s", [(2, 2), (2, 3), (2, 4), (3, 3), (3, 5)])
def test_kr_s_construction(r, s):
    g, p = kr_s_construction(r, s)
    assert p.order == 2 * s and is_ec(g, p)


def test_kr_s_params():
    with pytest.raises(InvalidFamilyParams):
        kr_s_construction(1, 3)
    with pytest.raises(InvalidFamilyParams):
        kr_s_construction(4, 3)


def test_upper_bound_never_exceeds_m():
    for g in (path(6), cycle(9), complete(5)):
        hi, trace = ec_upper_bound(g)
        assert hi <= g.m
        assert trace[0] == ("upper:size", g.m)
