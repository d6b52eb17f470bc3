"""Simple undirected graphs with a frozen edge indexing.

Edge sets are bitmasks over edge indices: bit ``i`` set means edge ``e_i``
is a member. All hot paths in the toolkit work on raw ``int`` masks; the
:class:`EdgeSet` and :class:`EdgePartition` wrappers exist for the public
API and carry the owning graph's edge count so mismatches are caught.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateEdge,
    EdgeOutOfRange,
    InvalidFamilyParams,
    MismatchedGraph,
    NotAPartition,
    SelfLoop,
    VertexOutOfRange,
)


def bits_of(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


@dataclass(frozen=True)
class EdgeSet:
    m: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.m:
            raise EdgeOutOfRange(f"edge mask {self.bits:#x} exceeds m={self.m}")

    @classmethod
    def of(cls, m: int, indices: Iterable[int]) -> EdgeSet:
        idx = list(indices)
        for i in idx:
            if not 0 <= i < m:
                raise EdgeOutOfRange(f"edge index {i} out of range for m={m}")
        return cls(m, mask_of(idx))

    def _check(self, other: EdgeSet) -> None:
        if other.m != self.m:
            raise MismatchedGraph(f"edge sets built for m={self.m} and m={other.m}")

    def __or__(self, other: EdgeSet) -> EdgeSet:
        self._check(other)
        return EdgeSet(self.m, self.bits | other.bits)

    def __and__(self, other: EdgeSet) -> EdgeSet:
        self._check(other)
        return EdgeSet(self.m, self.bits & other.bits)

    def __sub__(self, other: EdgeSet) -> EdgeSet:
        self._check(other)
        return EdgeSet(self.m, self.bits & ~other.bits)

    def __invert__(self) -> EdgeSet:
        return EdgeSet(self.m, ((1 << self.m) - 1) & ~self.bits)

    def __contains__(self, i: object) -> bool:
        return isinstance(i, int) and 0 <= i < self.m and bool(self.bits >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return bits_of(self.bits)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def isdisjoint(self, other: EdgeSet) -> bool:
        self._check(other)
        return not self.bits & other.bits

    def issubset(self, other: EdgeSet) -> bool:
        self._check(other)
        return not self.bits & ~other.bits

    def indices(self) -> list[int]:
        return list(bits_of(self.bits))

    def __repr__(self) -> str:
        return f"EdgeSet(m={self.m}, {self.indices()})"


@dataclass(frozen=True)
class EdgePartition:
    """Ordered list of disjoint, nonempty edge sets covering all ``m`` edges."""

    m: int
    classes: tuple[int, ...]

    def __post_init__(self) -> None:
        seen = 0
        for c in self.classes:
            if c == 0:
                raise NotAPartition("empty class")
            if c < 0 or c >> self.m:
                raise NotAPartition(f"class {c:#x} references edges beyond m={self.m}")
            if c & seen:
                raise NotAPartition("classes overlap")
            seen |= c
        if seen != (1 << self.m) - 1:
            missing = list(bits_of(((1 << self.m) - 1) & ~seen))
            raise NotAPartition(f"edges {missing} are not covered")

    @classmethod
    def from_lists(cls, m: int, classes: Iterable[Iterable[int]]) -> EdgePartition:
        masks = []
        for c in classes:
            idx = list(c)
            for i in idx:
                if not 0 <= i < m:
                    raise NotAPartition(f"edge index {i} out of range for m={m}")
            if len(set(idx)) != len(idx):
                raise NotAPartition(f"class {idx} repeats an edge")
            masks.append(mask_of(idx))
        return cls(m, tuple(masks))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> EdgePartition:
        """Build from a per-edge label list; classes ordered by first appearance."""
        order: dict[int, int] = {}
        masks: list[int] = []
        for i, lab in enumerate(labels):
            if lab not in order:
                order[lab] = len(masks)
                masks.append(0)
            masks[order[lab]] |= 1 << i
        return cls(len(labels), tuple(masks))

    @classmethod
    def singletons(cls, m: int) -> EdgePartition:
        return cls(m, tuple(1 << i for i in range(m)))

    @property
    def order(self) -> int:
        return len(self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[EdgeSet]:
        return (EdgeSet(self.m, c) for c in self.classes)

    def __getitem__(self, i: int) -> EdgeSet:
        return EdgeSet(self.m, self.classes[i])

    def as_lists(self) -> list[list[int]]:
        return [list(bits_of(c)) for c in self.classes]

    def labels(self) -> list[int]:
        out = [0] * self.m
        for k, c in enumerate(self.classes):
            for i in bits_of(c):
                out[i] = k
        return out

    def canonical(self) -> EdgePartition:
        """Same partition with classes ordered by their smallest edge."""
        return EdgePartition(self.m, tuple(sorted(self.classes, key=lambda c: c & -c)))


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph on vertices ``0..n-1`` with indexed edges."""

    n: int
    edges: tuple[tuple[int, int], ...]
    name: str = field(default="", compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        label = f"{self.name}, " if self.name else ""
        return f"Graph({label}n={self.n}, m={self.m})"

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    @cached_property
    def vertex_adj(self) -> tuple[int, ...]:
        """Vertex adjacency bitmasks."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def incident(self) -> tuple[int, ...]:
        """Per vertex, the bitmask of incident edge indices."""
        inc = [0] * self.n
        for i, (u, v) in enumerate(self.edges):
            inc[u] |= 1 << i
            inc[v] |= 1 << i
        return tuple(inc)

    @cached_property
    def closed_nbhd(self) -> tuple[int, ...]:
        """Per edge, the mask of N[e] (the edge plus all edges sharing an endpoint)."""
        inc = self.incident
        return tuple(inc[u] | inc[v] for u, v in self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(bin(a).count("1") for a in self.vertex_adj)

    @cached_property
    def edge_degrees(self) -> tuple[int, ...]:
        return tuple(bin(c).count("1") - 1 for c in self.closed_nbhd)

    @cached_property
    def full_edges(self) -> int:
        """Mask of edges adjacent to every other edge."""
        full = self.full_mask
        return mask_of(i for i, c in enumerate(self.closed_nbhd) if c == full)

    @cached_property
    def index_of(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def cover(self, mask: int) -> int:
        """Mask of edges dominated by ``mask`` (members included)."""
        inc = self.incident
        out = 0
        for i in bits_of(mask):
            u, v = self.edges[i]
            out |= inc[u] | inc[v]
        return out

    def dominates(self, mask: int) -> bool:
        return self.cover(mask) == self.full_mask

    def edge_set(self, indices: Iterable[int] = ()) -> EdgeSet:
        return EdgeSet.of(self.m, indices)

    def all_edges(self) -> EdgeSet:
        return EdgeSet(self.m, self.full_mask)

    def partition(self, classes: Iterable[Iterable[int]]) -> EdgePartition:
        return EdgePartition.from_lists(self.m, classes)

    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj = self.vertex_adj
        seen = frontier = 1
        while frontier:
            nxt = 0
            for v in bits_of(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def without_isolated_vertices(self) -> Graph:
        keep = [v for v in range(self.n) if self.vertex_adj[v]]
        remap = {v: i for i, v in enumerate(keep)}
        return Graph(len(keep), tuple((remap[u], remap[v]) for u, v in self.edges), self.name)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Vertex ``v`` becomes ``perm[v]``; edge order is preserved."""
        edges = []
        for u, v in self.edges:
            a, b = perm[u], perm[v]
            edges.append((a, b) if a < b else (b, a))
        return Graph(self.n, tuple(edges))

    def sorted_edges(self) -> Graph:
        return Graph(self.n, tuple(sorted(self.edges)), self.name)


def make_graph(n: int, edge_list: Iterable[tuple[int, int]], name: str = "") -> Graph:
    if n < 0:
        raise VertexOutOfRange(f"negative vertex count {n}")
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(f"vertex {x} not in 0..{n - 1}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(f"edge {e} repeated")
        seen.add(e)
        edges.append(e)
    return Graph(n, tuple(edges), name)


def _check_edge(g: Graph, e: int) -> None:
    if not 0 <= e < g.m:
        raise EdgeOutOfRange(f"edge index {e} out of range for m={g.m}")


def edge_neighborhood(g: Graph, e: int, closed: bool = False) -> EdgeSet:
    _check_edge(g, e)
    mask = g.closed_nbhd[e]
    if not closed:
        mask &= ~(1 << e)
    return EdgeSet(g.m, mask)


def edge_degree(g: Graph, e: int) -> int:
    _check_edge(g, e)
    return g.edge_degrees[e]


def is_full_edge(g: Graph, e: int) -> bool:
    _check_edge(g, e)
    return g.edge_degrees[e] == g.m - 1


def line_graph(g: Graph) -> Graph:
    """Vertex ``i`` of the result is edge ``e_i``; pairs listed lexicographically."""
    nb = g.closed_nbhd
    pairs = [(i, j) for i in range(g.m) for j in range(i + 1, g.m) if nb[i] >> j & 1]
    return Graph(g.m, tuple(pairs), f"L({g.name})" if g.name else "")


def disjoint_union(*graphs: Graph) -> Graph:
    edges: list[tuple[int, int]] = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return Graph(offset, tuple(edges))


# --- standard families -------------------------------------------------------
#
# Edge orders are frozen so certificates are reproducible:
#   path, cycle        consecutive (e_i joins i and i+1; the cycle closes with (0, n-1) last)
#   complete           lexicographic by endpoint pair
#   complete_bipartite left part 0..r-1, right part r..r+s-1, lexicographic
#   star               center 0, edges (0, 1), ..., (0, n)
#   double_star        centers 0 and 1; edge (0,1) first, then the p leaves of 0,
#                      then the q leaves of 1


def path(n: int) -> Graph:
    if n < 2:
        raise InvalidFamilyParams("path needs n >= 2")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)), f"P{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidFamilyParams("cycle needs n >= 3")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),), f"C{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidFamilyParams("complete graph needs n >= 1")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)), f"K{n}")


def complete_bipartite(r: int, s: int) -> Graph:
    if r < 1 or s < 1:
        raise InvalidFamilyParams("complete bipartite needs r, s >= 1")
    edges = tuple((i, r + j) for i in range(r) for j in range(s))
    return Graph(r + s, edges, f"K{r},{s}")


def star(n: int) -> Graph:
    """The star K_{1,n} with ``n`` leaves."""
    if n < 1:
        raise InvalidFamilyParams("star needs n >= 1 leaves")
    return Graph(n + 1, tuple((0, i) for i in range(1, n + 1)), f"K1,{n}")


def double_star(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise InvalidFamilyParams("double star needs p, q >= 1")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(p)]
    edges += [(1, 2 + p + j) for j in range(q)]
    return Graph(2 + p + q, tuple(edges), f"S{p},{q}")


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "double_star": double_star,
}

# short names accepted by the CLI mini-language
FAMILY_ALIASES = {
    "path": "path",
    "p": "path",
    "cycle": "cycle",
    "c": "cycle",
    "complete": "complete",
    "k": "complete",
    "complete_bipartite": "complete_bipartite",
    "kb": "complete_bipartite",
    "star": "star",
    "double_star": "double_star",
    "dstar": "double_star",
}


def family(kind: str, *params: int) -> Graph:
    try:
        builder = FAMILIES[FAMILY_ALIASES.get(kind, kind)]
    except KeyError:
        raise InvalidFamilyParams(f"unknown family {kind!r}") from None
    try:
        return builder(*params)
    except TypeError as exc:
        raise InvalidFamilyParams(f"bad parameters {params} for {kind}: {exc}") from None


def parse_family_spec(spec: str) -> Graph:
    """Parse ``name:params`` such as ``path:6``, ``kb:2,4`` or ``dstar:2,3``."""
    name, _, rest = spec.partition(":")
    try:
        params = [int(x) for x in rest.split(",")] if rest else []
    except ValueError:
        raise InvalidFamilyParams(f"non-integer parameter in {spec!r}") from None
    return family(name.strip().lower(), *params)
