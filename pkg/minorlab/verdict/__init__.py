"""
HC verdicts, theorem predicates, pruning filters and the separator-claims audit.
"""

from .audit import claims_audit
from .pipeline import process_batch, process_line, run_filters, search_corpus
from .separation import find_clique_separation
from .theorems import (
    hc2iff_check,
    hc_verdict,
    k8_degree_filter,
    k8_degree_profile_filter,
    lemma1_admissible,
    min_degree_cap,
    proven_h_filter,
    seagull_condition,
    theorem1_pigeonhole,
)

__all__ = [
    "claims_audit",
    "find_clique_separation",
    "hc2iff_check",
    "hc_verdict",
    "k8_degree_filter",
    "k8_degree_profile_filter",
    "lemma1_admissible",
    "min_degree_cap",
    "process_batch",
    "process_line",
    "proven_h_filter",
    "run_filters",
    "search_corpus",
    "seagull_condition",
    "theorem1_pigeonhole",
]
