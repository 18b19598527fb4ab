"""
Forbidden induced subgraph catalog and matcher.
"""

from .catalog import Pattern, catalog, get_pattern
from .matcher import Embedding, contains_induced, is_pattern_free

__all__ = ["Embedding", "Pattern", "catalog", "contains_induced", "get_pattern", "is_pattern_free"]
