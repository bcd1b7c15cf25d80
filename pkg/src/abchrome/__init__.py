"""Acyclic b-colourings of cubic graphs."""

from .coloring import Coloring, is_ab_minimal, is_acyclic, is_proper
from .graph import Graph, emit_graph6, make_graph, parse_graph6
from .solver import SearchBudget, compute_A, compute_Ab, compute_phi

__all__ = [
    "Coloring",
    "Graph",
    "SearchBudget",
    "compute_A",
    "compute_Ab",
    "compute_phi",
    "emit_graph6",
    "is_ab_minimal",
    "is_acyclic",
    "is_proper",
    "make_graph",
    "parse_graph6",
]
