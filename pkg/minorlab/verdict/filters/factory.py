"""
Filter factory.
"""

from typing import Dict, List, Type

from minorlab.core.constants import FilterName
from minorlab.core.errors import ConfigurationError
from minorlab.models.verdict import FilterConfig

from .base import BaseFilter
from .builtin import (
    Alpha2Filter,
    DominatingMatchingFilter,
    K8Filter,
    Lemma1Filter,
    MinDegreeFilter,
    OmegaFilter,
    PatternFilter,
    SeagullFilter,
)


class FilterFactory:
    """Factory for pruning filters keyed by name."""

    _filters: Dict[FilterName, Type[BaseFilter]] = {
        FilterName.ALPHA2: Alpha2Filter,
        FilterName.LEMMA1: Lemma1Filter,
        FilterName.MIN_DEGREE: MinDegreeFilter,
        FilterName.OMEGA7: OmegaFilter,
        FilterName.SEAGULL: SeagullFilter,
        FilterName.K8: K8Filter,
        FilterName.PATTERNS: PatternFilter,
        FilterName.DOMINATING_MATCHING: DominatingMatchingFilter,
    }

    @classmethod
    def create_filter(cls, name: FilterName, config: FilterConfig) -> BaseFilter:
        """
        Create one filter.

        Args:
            name (FilterName): Filter name.
            config (FilterConfig): Shared parameters.

        Returns:
            BaseFilter: Filter instance.

        Raises:
            ConfigurationError: If no filter is registered under the name.
        """
        filter_class = cls._filters.get(name)
        if filter_class is None:
            raise ConfigurationError(
                f"no filter registered as '{name}'",
                {"filter": str(name), "known": [f.value for f in cls._filters]},
            )
        return filter_class(config)

    @classmethod
    def create_chain(cls, config: FilterConfig) -> List[BaseFilter]:
        """Filters in the configured order."""
        return [cls.create_filter(name, config) for name in config.filters]

    @classmethod
    def register_filter(cls, name: FilterName, filter_class: Type[BaseFilter]) -> None:
        """
        Register a custom filter.

        Args:
            name (FilterName): Filter name.
            filter_class (Type[BaseFilter]): Filter class.
        """
        cls._filters[name] = filter_class
