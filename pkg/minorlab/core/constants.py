"""
Constants and enums for minorlab.
"""

from enum import Enum


class SearchMode(str, Enum):
    """Clique-minor search strategies."""

    EXACT = "exact"
    HEURISTIC = "heuristic"


class SearchStatus(str, Enum):
    """Outcome of a bounded clique-minor search."""

    FOUND = "found"
    EXHAUSTED = "exhausted"
    UNKNOWN = "unknown"


class VerdictOutcome(str, Enum):
    """Per-graph Hadwiger verdict."""

    HOLDS = "holds"
    COUNTEREXAMPLE = "counterexample"
    UNKNOWN = "unknown"


class FilterResult(str, Enum):
    """Result of a pruning filter."""

    PASS = "pass"
    REJECT = "reject"


class FilterName(str, Enum):
    """Pruning filters understood by the corpus search."""

    ALPHA2 = "alpha2"
    LEMMA1 = "lemma1"
    MIN_DEGREE = "min_degree"
    OMEGA7 = "omega7"
    SEAGULL = "seagull"
    K8 = "k8"
    PATTERNS = "patterns"
    DOMINATING_MATCHING = "dominating_matching"


class VerificationLevel(str, Enum):
    """How much of a Ramsey value has been machine-checked."""

    CONSTANT_ONLY = "constant-only"
    LOWER_WITNESSED = "lower-witnessed"
    FULLY_VERIFIED = "fully-verified"


class VerdictScope(str, Enum):
    """Which corpus graphs receive a minor-search verdict."""

    SURVIVORS = "survivors"
    ALL = "all"
    NONE = "none"


class AuditStatus(str, Enum):
    """Overall result of a separator-claims audit."""

    CONSISTENT = "consistent"
    PREDICTED_COPY = "predicted_copy"
    DISCREPANCY = "discrepancy"


class ClaimName(str, Enum):
    """The four separator claims checked by the audit."""

    NEIGHBOURS_IN_F1 = "claim1_neighbours_in_f1"
    T_COMPLETE_TO_F2 = "claim2_t_complete_to_f2"
    F2_SIZE = "claim3_f2_size"
    F1_SIZE = "claim4_f1_size"


# Order limits
MAX_ORDER = 64
GRAPH6_MAX_ORDER = 62
CANONICAL_MAX_ORDER = 16
TRIANGLE_FREE_MAX_ORDER = 10
INDEPENDENCE_MAX_ORDER = 32
CHROMATIC_MAX_ORDER = 20
PATTERN_MAX_ORDER = 8

# Minor search defaults
DEFAULT_EXACT_CAP = 14
DEFAULT_MINOR_BUDGET = 2_000_000
HEURISTIC_SEED = 0x5EED
HEURISTIC_RESTARTS_PER_VERTEX = 10

# Largest connected dominating matching tried by default
DEFAULT_DOMINATING_MATCHING_SIZE = 3

# K7-free graphs with alpha <= 2 are known to satisfy HC
OMEGA_THRESHOLD = 7

# R(3, k) as used by the proofs
R3_VALUES = {3: 6, 4: 9, 5: 14, 6: 18, 7: 23, 8: 28}

# Order of the only K8-free candidates left by R(3,8) = 28
K8_CANDIDATE_ORDER = 27

DEFAULT_FILTER_ORDER = (
    FilterName.ALPHA2,
    FilterName.LEMMA1,
    FilterName.MIN_DEGREE,
    FilterName.OMEGA7,
    FilterName.SEAGULL,
    FilterName.K8,
    FilterName.PATTERNS,
    FilterName.DOMINATING_MATCHING,
)

DEFAULT_PROVEN_PATTERNS = ("K1_6bar", "H7", "K5plus", "W5")

# Exit codes
EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_ERROR = 2
