"""
Exact graph invariants.
"""

from .cliques import alpha_at_most_2, clique_number, independence_number, max_clique
from .coloring import chromatic_alpha2, chromatic_number_exact
from .matching import max_matching

__all__ = [
    "alpha_at_most_2",
    "chromatic_alpha2",
    "chromatic_number_exact",
    "clique_number",
    "independence_number",
    "max_clique",
    "max_matching",
]
