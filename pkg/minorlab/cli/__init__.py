"""
Command-line front end.
"""

from .app import main, run

__all__ = ["main", "run"]
