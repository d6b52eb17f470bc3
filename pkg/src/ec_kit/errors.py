"""Exception hierarchy shared by every layer of the toolkit."""

from __future__ import annotations


class EcKitError(Exception):
    """Base class for all toolkit errors."""


class GraphError(EcKitError, ValueError):
    pass


class DuplicateEdge(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class EdgeOutOfRange(GraphError, IndexError):
    pass


class InvalidFamilyParams(GraphError):
    pass


class MalformedGraph6(GraphError):
    pass


class UnsupportedOrder(GraphError):
    pass


class OrderTooLarge(GraphError):
    pass


class MismatchedGraph(EcKitError, ValueError):
    """An EdgeSet or partition was built for a graph with a different size."""


class NotAPartition(EcKitError, ValueError):
    pass


class OverlappingSets(EcKitError, ValueError):
    pass


class EmptySet(EcKitError, ValueError):
    pass


class EmptyEdgeSet(EcKitError, ValueError):
    """The graph has no edges, so coalition notions are undefined."""


class NotDominating(EcKitError, ValueError):
    pass


class NotAnEcPartition(EcKitError, ValueError):
    pass


class HasFullEdge(EcKitError, ValueError):
    pass


class NoEdges(EmptyEdgeSet):
    pass


class SizeCapExceeded(EcKitError):
    pass


class TimeBudgetExceeded(EcKitError):
    """Exact search ran out of time.

    ``lo``/``hi`` bracket the true value; ``partition`` is the best
    validated partition found so far (order ``lo``).
    """

    def __init__(self, lo: int, hi: int, partition=None, elapsed: float = 0.0):
        super().__init__(f"time budget exhausted after {elapsed:.2f}s; EC in [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi
        self.partition = partition
        self.elapsed = elapsed
