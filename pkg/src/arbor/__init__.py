"""Forest-class covers of graph edges: exact search, constructions and certificates."""
from .certificates import ColoringCertificate, CoverCertificate, verify_certificate, verify_coloring
from .classes import ForestClass, validate_edge_set
from .graph import Graph
from .solver import Budget, SolveRequest, SolveResult, min_cover, solve

__all__ = [
    "ColoringCertificate", "CoverCertificate", "verify_certificate", "verify_coloring",
    "ForestClass", "validate_edge_set", "Graph",
    "Budget", "SolveRequest", "SolveResult", "min_cover", "solve",
]
