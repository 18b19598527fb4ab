"""
Custom exception hierarchy for minorlab.
"""

from typing import Any, Dict, List, Optional

from .constants import EXIT_ERROR


class MinorLabError(Exception):
    """Base exception for all minorlab errors."""

    def __init__(
        self,
        message: str,
        details: Optional[Dict[str, Any]] = None,
        exit_code: int = EXIT_ERROR,
    ):
        """
        Initialize minorlab exception.

        Args:
            message (str): Error message.
            details (Optional[Dict[str, Any]]): Additional error details.
            exit_code (int): Process exit code reported by the CLI.
        """
        super().__init__(message)
        self.message = message
        self.details = details or {}
        self.exit_code = exit_code


class GraphFormatError(MinorLabError):
    """Raised when a graph6 line cannot be decoded or encoded."""

    def __init__(self, message: str, text: Optional[str] = None):
        """
        Initialize graph format error.

        Args:
            message (str): Error message.
            text (Optional[str]): Offending input, if any.
        """
        details = {"text": text} if text is not None else {}
        super().__init__(message, details)


class GraphSizeError(MinorLabError):
    """Raised when a graph exceeds the order an operation supports."""

    def __init__(self, operation: str, n: int, max_n: int):
        """
        Initialize graph size error.

        Args:
            operation (str): Operation that refused the graph.
            n (int): Order of the graph.
            max_n (int): Largest supported order.
        """
        message = f"{operation} supports at most {max_n} vertices, got {n}"
        super().__init__(message, {"operation": operation, "n": n, "max_n": max_n})


class PreconditionError(MinorLabError):
    """Raised when an operation's input precondition does not hold."""


class CertificateError(MinorLabError):
    """Raised when a clique-minor certificate fails verification."""


class OverlappingBranchSetsError(CertificateError):
    """Two branch sets share a vertex."""

    def __init__(self, first: int, second: int, shared: List[int]):
        """
        Initialize overlap error.

        Args:
            first (int): Index of the first branch set.
            second (int): Index of the second branch set.
            shared (List[int]): Vertices in both sets.
        """
        message = f"Branch sets {first} and {second} overlap on {shared}"
        super().__init__(message, {"sets": [first, second], "shared": shared})


class DisconnectedBranchSetError(CertificateError):
    """A branch set is empty or does not induce a connected subgraph."""

    def __init__(self, index: int, members: List[int]):
        """
        Initialize disconnected set error.

        Args:
            index (int): Index of the branch set.
            members (List[int]): Vertices of the set.
        """
        message = f"Branch set {index} {members} is not connected"
        super().__init__(message, {"set": index, "members": members})


class MissingCrossEdgeError(CertificateError):
    """Two branch sets are not joined by any edge."""

    def __init__(self, first: int, second: int):
        """
        Initialize missing cross edge error.

        Args:
            first (int): Index of the first branch set.
            second (int): Index of the second branch set.
        """
        message = f"No edge joins branch sets {first} and {second}"
        super().__init__(message, {"sets": [first, second]})


class InvalidMatchingError(MinorLabError):
    """Raised when a matching is not a connected dominating matching."""


class SearchCapError(MinorLabError):
    """Raised when exact search is requested beyond its order cap."""

    def __init__(self, operation: str, n: int, cap: int):
        """
        Initialize search cap error.

        Args:
            operation (str): Operation that refused the graph.
            n (int): Order of the graph.
            cap (int): Configured exact-search cap.
        """
        message = f"{operation}: exact search capped at {cap} vertices, got {n}"
        super().__init__(message, {"operation": operation, "n": n, "cap": cap})


class BudgetExhaustedError(MinorLabError):
    """Raised when an exact computation runs out of its node budget."""


class RamseyRangeError(MinorLabError):
    """Raised when a Ramsey operation is asked for an unsupported k."""

    def __init__(self, operation: str, k: int, supported: List[int]):
        """
        Initialize Ramsey range error.

        Args:
            operation (str): Operation name.
            k (int): Requested k.
            supported (List[int]): Supported values of k.
        """
        message = f"{operation}: k={k} is out of the verified range {supported}"
        super().__init__(message, {"operation": operation, "k": k, "supported": supported})


class VerificationError(MinorLabError):
    """Raised when a machine check fails."""


class ConfigurationError(MinorLabError):
    """Raised when configuration is invalid or missing."""
