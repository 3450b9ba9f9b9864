"""Injective hulls and the Helly-gap of finite graphs."""
from .errors import GraphError, HellyGapError, HullGuardError, OracleBudgetError, ParseError
from .gap import GapCertificate, check_disk_system, gap_from_hull, gap_oracle, helly_gap, is_helly, max_subset_gap_bound
from .graph import Graph, center_set, eccentricity_profile, graph_power, add_pendant, interval_slice
from .hull import Hull, build_hull, enumerate_extremal, is_extremal
from .invariants import (
    TreeDecomposition,
    alpha_i_parameter,
    audit_tree_decomposition,
    chordality,
    hyperbolicity_2delta,
    interval_thinness,
)
from .io import format_graph, parse_graph, read_graph, write_graph
from .kernels import BACKEND_NAME
from .suite import RunReport, SuiteOptions, emit_report, run_suite

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME", "GapCertificate", "Graph", "GraphError", "HellyGapError", "Hull",
    "HullGuardError", "OracleBudgetError", "ParseError", "RunReport", "SuiteOptions",
    "TreeDecomposition", "add_pendant", "alpha_i_parameter", "audit_tree_decomposition",
    "build_hull", "center_set", "check_disk_system", "chordality", "eccentricity_profile",
    "emit_report", "enumerate_extremal", "format_graph", "gap_from_hull", "gap_oracle",
    "graph_power", "helly_gap", "hyperbolicity_2delta", "interval_slice", "interval_thinness",
    "is_extremal", "is_helly", "max_subset_gap_bound", "parse_graph", "read_graph", "run_suite",
    "write_graph",
]
