"""Constructive clique immersions in graphs of small independence number."""

from .aalpha import AAlphaGraph, build_aalpha, enumerate_minimal_cuts, is_minimal_cut
from .basecase import default_base_case
from .beta import BetaTable, beta, f_of_alpha, glw_bound, guarantee, passes_threshold
from .certificate import ImmersionCertificate, verify
from .class_flow import ClassFlowInstance, max_flow, min_vertex_cut
from .extractor import ExtractionTrace, InvariantViolation, extract, lift_paths
from .graph import Graph, independence_number, max_independent_set, trace_partition
from .graphio import parse_graph, read_graph, write_graph
from .oracle import max_immersion_clique

__all__ = [
    "AAlphaGraph", "BetaTable", "ClassFlowInstance", "ExtractionTrace", "Graph",
    "ImmersionCertificate", "InvariantViolation", "beta", "build_aalpha",
    "default_base_case", "enumerate_minimal_cuts", "extract", "f_of_alpha",
    "glw_bound", "guarantee", "independence_number", "is_minimal_cut", "lift_paths",
    "max_flow", "max_immersion_clique", "max_independent_set", "min_vertex_cut",
    "parse_graph", "passes_threshold", "read_graph", "trace_partition", "verify",
    "write_graph",
]
