"""
Ramsey numbers R(3,k) with witnesses and small exhaustive checks.
"""

from .numbers import r3_constant, ramsey_fact
from .verify import circulant, verify_lower_witness, verify_upper_small

__all__ = ["circulant", "r3_constant", "ramsey_fact", "verify_lower_witness", "verify_upper_small"]
