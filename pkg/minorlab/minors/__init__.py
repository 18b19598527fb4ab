"""
Clique-minor certificates, search and dominating-matching reductions.
"""

from .certificate import is_valid_certificate, verify_certificate
from .dominating import (
    MatchingReduction,
    build_reduction,
    check_dominating_matching,
    find_connected_dominating_matching,
    is_connected_dominating_matching,
    lemma2_certificate,
    reduce_and_lift,
)
from .heuristic import heuristic_clique_minor
from .search import clique_minor_upper_bound, hadwiger_at_least, hadwiger_number

__all__ = [
    "MatchingReduction",
    "build_reduction",
    "check_dominating_matching",
    "clique_minor_upper_bound",
    "find_connected_dominating_matching",
    "hadwiger_at_least",
    "hadwiger_number",
    "heuristic_clique_minor",
    "is_connected_dominating_matching",
    "is_valid_certificate",
    "lemma2_certificate",
    "reduce_and_lift",
    "verify_certificate",
]
