"""
Base pruning filter interface.
"""

from abc import ABC, abstractmethod

from minorlab.core.constants import FilterName, FilterResult
from minorlab.graphcore.graph import Graph
from minorlab.models.verdict import FilterConfig, FilterOutcome


class BaseFilter(ABC):
    """A pure predicate deciding whether a graph is still a viable counterexample."""

    name: FilterName

    def __init__(self, config: FilterConfig):
        """
        Initialize filter.

        Args:
            config (FilterConfig): Filter parameters.
        """
        self.config = config

    @abstractmethod
    def apply(self, g: Graph) -> FilterOutcome:
        """
        Evaluate the filter.

        Args:
            g (Graph): Candidate graph.

        Returns:
            FilterOutcome: pass keeps the graph, reject prunes it.
        """
        pass

    def _pass(self, reason: str = "") -> FilterOutcome:
        return FilterOutcome(name=self.name, result=FilterResult.PASS, reason=reason)

    def _reject(self, reason: str) -> FilterOutcome:
        return FilterOutcome(name=self.name, result=FilterResult.REJECT, reason=reason)
