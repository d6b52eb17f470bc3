"""Edge coalitions in graphs: exact solver, constructions and a verification harness."""

from __future__ import annotations

from .coalition import (
    ClassKind,
    CoalitionGraph,
    PartitionVerdict,
    build_ecg,
    forms_edge_coalition,
    is_ec_partition,
    is_self_edge_coalition,
    validate_partition,
)
from .domination import check_edge_dominating, edge_domatic_number, enumerate_minimal_eds
from .graph import EdgePartition, EdgeSet, Graph, family, make_graph
from .solver import EcResult, SolverConfig, ec_exact, ec_lower_bound, ec_upper_bound

__all__ = [
    "ClassKind",
    "CoalitionGraph",
    "EcResult",
    "EdgePartition",
    "EdgeSet",
    "Graph",
    "PartitionVerdict",
    "SolverConfig",
    "build_ecg",
    "check_edge_dominating",
    "ec_exact",
    "ec_lower_bound",
    "ec_upper_bound",
    "edge_domatic_number",
    "enumerate_minimal_eds",
    "family",
    "forms_edge_coalition",
    "is_ec_partition",
    "is_self_edge_coalition",
    "make_graph",
    "validate_partition",
]
