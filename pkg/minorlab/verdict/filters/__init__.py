"""
Pruning filters for counterexample search.
"""

from .base import BaseFilter
from .factory import FilterFactory

__all__ = ["BaseFilter", "FilterFactory"]
