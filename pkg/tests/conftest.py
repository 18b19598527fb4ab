"""
Pytest configuration and fixtures.
"""

import logging

import pytest

from minorlab.core.config import Settings
from minorlab.graphcore.graph import Graph, disjoint_union, join


@pytest.fixture
def test_settings() -> Settings:
    """
    Create test settings with overrides.

    Returns:
        Settings: Test configuration.
    """
    return Settings(jobs=1, log_level="DEBUG", log_json=True)


@pytest.fixture
def c5() -> Graph:
    """5-cycle 0-1-2-3-4-0 (graph6 'Dhc')."""
    return Graph.cycle(5)


@pytest.fixture
def k7() -> Graph:
    """Complete graph on 7 vertices."""
    return Graph.complete(7)


@pytest.fixture
def c5_join_c5() -> Graph:
    """C5 v C5: two 5-cycles with every cross edge; alpha = 2, chi = 6."""
    return join(Graph.cycle(5), Graph.cycle(5))


@pytest.fixture
def p4() -> Graph:
    """Path on 4 vertices."""
    return Graph.path(4)


@pytest.fixture
def petersen() -> Graph:
    """Petersen graph: outer 5-cycle, inner pentagram, spokes."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


@pytest.fixture
def k6_plus_k1() -> Graph:
    """K6 with an isolated vertex 6 (the complement of K_{1,6})."""
    return disjoint_union(Graph.complete(6), Graph.empty(1))


@pytest.fixture(autouse=True)
def reset_package_logging():
    """Drop handlers installed by setup_logging so they never outlive a captured stream."""
    yield
    logging.getLogger("minorlab").handlers.clear()
