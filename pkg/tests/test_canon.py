from __future__ import annotations

import random

import pytest
from conftest import graphs
from hypothesis import given, settings
from oracles import isomorphic

from ec_kit.canon import canonical_graph, canonical_key, is_isomorphic
from ec_kit.errors import OrderTooLarge
from ec_kit.generate import (
    CONNECTED_COUNTS,
    GRAPH_COUNTS,
    bundled_graphs,
    generate_graphs,
    generate_trees,
    generate_unicyclic,
)
from ec_kit.graph import Graph, complete, cycle, disjoint_union, make_graph, path


def _shuffle(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return make_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=7))
def test_key_invariant_under_relabeling(g):
    rng = random.Random(g.m * 31 + g.n)
    h = _shuffle(g, rng)
    assert canonical_key(g) == canonical_key(h)
    assert is_isomorphic(canonical_graph(g), g)


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_key_equality_matches_permutation_oracle(g, h):
    assert (canonical_key(g) == canonical_key(h)) == isomorphic(g, h)


def test_non_isomorphic_same_degrees():
    assert not is_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3)))


def test_order_cap():
    with pytest.raises(OrderTooLarge):
        canonical_key(path(11))
    assert canonical_key(path(11), cap=11)


def test_complete_graph_fast():
    assert canonical_key(complete(10))


@pytest.mark.parametrize("n", range(0, 7))
def test_generated_counts(n):
    gs = generate_graphs(n)
    assert len(gs) == GRAPH_COUNTS[n]
    assert sum(g.is_connected() for g in gs) == CONNECTED_COUNTS[n] or n == 0


@pytest.mark.parametrize("n", range(1, 8))
def test_bundled_lists(n):
    gs = bundled_graphs(n)
    assert len(gs) == GRAPH_COUNTS[n]
    assert len({canonical_key(g) for g in gs}) == len(gs)


def test_trees_and_unicyclic_counts():
    # unlabeled trees and connected unicyclic graphs
    assert [len(generate_trees(n)) for n in range(1, 9)] == [1, 1, 1, 2, 3, 6, 11, 23]
    assert [len(generate_unicyclic(n)) for n in range(3, 9)] == [1, 2, 5, 13, 33, 89]
    for g in generate_unicyclic(6):
        assert g.is_connected() and g.m == g.n
