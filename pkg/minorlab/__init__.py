"""
minorlab: Hadwiger's conjecture checker for graphs with independence number at most two.
"""

__version__ = "1.0.0"
