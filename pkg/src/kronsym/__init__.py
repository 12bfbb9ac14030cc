"""Distinguishing numbers and indices of Kronecker and Cartesian graph products."""
from .distinguishing import (DistinguishingResult, SearchBudget, count_distinguishing_labelings,
                             count_inequivalent_distinguishing, distinguishing_index,
                             distinguishing_number, lift_kronecker_edge_labeling)
from .graph_core import Graph, build_graph
from .products import cartesian, kronecker, product_power
from .skeleton import boolean_square, cartesian_skeleton
from .symmetry import AutomorphismGroup, automorphism_group

__version__ = "0.1.0"

__all__ = [
    "AutomorphismGroup", "DistinguishingResult", "Graph", "SearchBudget", "automorphism_group",
    "boolean_square", "build_graph", "cartesian", "cartesian_skeleton",
    "count_distinguishing_labelings", "count_inequivalent_distinguishing", "distinguishing_index",
    "distinguishing_number", "kronecker", "lift_kronecker_edge_labeling", "product_power",
]
