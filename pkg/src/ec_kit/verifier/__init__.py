"""Verification harness: sweeps, family tables, characterizations, coalition-graph catalog."""

from __future__ import annotations

from .catalog import CatalogReport, check_k24, check_stars, self_edge_coalition_graphs, verify_ecg_catalog
from .checks import CheckContext, CheckDefinition, CheckRegistry, Severity, default_registry
from .families import (
    FamilyRow,
    characterize_ec_equals_m,
    compare_with_textual,
    rows_to_csv,
    run_family_suite,
    small_ec_characterization,
)
from .report import SweepReport, report
from .sweep import AssertCheckFailed, RecordStore, SweepConfig, SweepRecord, evaluate_graph, sweep

__all__ = [
    "AssertCheckFailed",
    "CatalogReport",
    "CheckContext",
    "CheckDefinition",
    "CheckRegistry",
    "FamilyRow",
    "RecordStore",
    "Severity",
    "SweepConfig",
    "SweepRecord",
    "SweepReport",
    "characterize_ec_equals_m",
    "check_k24",
    "check_stars",
    "compare_with_textual",
    "default_registry",
    "evaluate_graph",
    "report",
    "rows_to_csv",
    "run_family_suite",
    "self_edge_coalition_graphs",
    "small_ec_characterization",
    "sweep",
    "verify_ecg_catalog",
]
