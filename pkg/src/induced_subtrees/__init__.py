"""Enumeration of induced subtrees in k-degenerate graphs."""

from .degeneracy import (
    DegeneracyOrdering,
    OrderedGraph,
    build_ordered_graph,
    compute_degeneracy_ordering,
    order_graph,
    verify_ordering,
)
from .enumerator import (
    CallbackSink,
    CountSink,
    DeltaRecorder,
    DeltaSink,
    EnumerationOptions,
    EnumerationState,
    EnumerationStats,
    ListSink,
    SolutionSink,
    enumerate_basic,
    enumerate_subtrees,
)
from .graph import Graph, GraphError, ParseError, from_edges, parse_edge_list, random_k_degenerate, to_edge_text
from .oracle import TooLarge, brute_force_degeneracy, brute_force_enumerate, is_induced_subtree

__all__ = [
    "CallbackSink",
    "CountSink",
    "DegeneracyOrdering",
    "DeltaRecorder",
    "DeltaSink",
    "EnumerationOptions",
    "EnumerationState",
    "EnumerationStats",
    "Graph",
    "GraphError",
    "ListSink",
    "OrderedGraph",
    "ParseError",
    "SolutionSink",
    "TooLarge",
    "brute_force_degeneracy",
    "brute_force_enumerate",
    "build_ordered_graph",
    "compute_degeneracy_ordering",
    "enumerate_basic",
    "enumerate_subtrees",
    "from_edges",
    "is_induced_subtree",
    "order_graph",
    "parse_edge_list",
    "random_k_degenerate",
    "to_edge_text",
    "verify_ordering",
]
