"""Slow, obviously-correct reference implementations used by the tests.

Nothing here uses bitmasks or the package's own predicates: edges are
vertex pairs, sets are Python sets, and every definition is checked
literally.
"""

from __future__ import annotations

from itertools import permutations


def edge_tuples(g):
    return [tuple(e) for e in g.edges]


def dominates(edges, chosen):
    """Every edge is in ``chosen`` or shares an endpoint with a chosen edge."""
    chosen_edges = [edges[i] for i in chosen]
    for i, (u, v) in enumerate(edges):
        if i in chosen:
            continue
        if not any(u in e or v in e for e in chosen_edges):
            return False
    return True


def is_ec_partition(edges, classes):
    classes = [set(c) for c in classes]
    dom = [dominates(edges, c) for c in classes]
    for i, c in enumerate(classes):
        if dom[i]:
            if len(c) != 1:
                return False
            continue
        if not any(
            j != i and not dom[j] and dominates(edges, c | classes[j]) for j in range(len(classes))
        ):
            return False
    return True


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1 :]


def ec_number(g):
    """Maximum order over all ec-partitions, no pruning at all."""
    edges = edge_tuples(g)
    best = 0
    for part in set_partitions(range(len(edges))):
        if is_ec_partition(edges, part):
            best = max(best, len(part))
    return best


def minimal_dominating_sets(g):
    edges = edge_tuples(g)
    m = len(edges)
    out = []
    for mask in range(1, 1 << m):
        s = {i for i in range(m) if mask >> i & 1}
        if dominates(edges, s) and all(not dominates(edges, s - {i}) for i in s):
            out.append(frozenset(s))
    return set(out)


def edge_domatic_number(g):
    """Vertex domatic number of the line graph by brute force over colourings."""
    edges = edge_tuples(g)
    m = len(edges)
    adj = {i: {j for j in range(m) if j != i and set(edges[i]) & set(edges[j])} for i in range(m)}

    def ok(colour, k):
        for i in range(m):
            seen = {colour[i]} | {colour[j] for j in adj[i]}
            if len(seen) < k:
                return False
        return True

    best = 1
    for k in range(2, m + 1):
        found = False

        def rec(i, colour, used):
            nonlocal found
            if found:
                return
            if i == m:
                if used == k and ok(colour, k):
                    found = True
                return
            for c in range(min(used + 1, k)):
                colour.append(c)
                rec(i + 1, colour, max(used, c + 1))
                colour.pop()

        rec(0, [], 0)
        if not found:
            break
        best = k
    return best


def isomorphic(g, h):
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    target = {frozenset(e) for e in h.edges}
    return any({frozenset((p[u], p[v])) for u, v in g.edges} == target for p in permutations(range(g.n)))
