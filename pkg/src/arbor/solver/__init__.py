"""Exact search for minimum covers, colourings and the parameter chain."""
from .chain import PARAMETERS, ParameterReport, check_inequality_chain, compute_parameters
from .coloring import (
    acyclic_chromatic_number, chromatic_number, edge_chromatic_number, k_coloring,
)
from .engine import (
    EXHAUSTED_S, FEASIBLE_S, INFEASIBLE_S, Budget, SolveRequest, SolveResult,
    decide_cover, lower_bound, min_cover, solve, strong_chromatic_index,
)

__all__ = [
    "PARAMETERS", "ParameterReport", "check_inequality_chain", "compute_parameters",
    "acyclic_chromatic_number", "chromatic_number", "edge_chromatic_number", "k_coloring",
    "EXHAUSTED_S", "FEASIBLE_S", "INFEASIBLE_S", "Budget", "SolveRequest", "SolveResult",
    "decide_cover", "lower_bound", "min_cover", "solve", "strong_chromatic_index",
]
