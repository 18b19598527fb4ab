"""
Tests for the pattern catalog.
"""

import pytest

from minorlab.core.errors import PreconditionError
from minorlab.patterns.catalog import catalog, get_pattern, pattern_names


@pytest.mark.parametrize(
    "name,n,m",
    [
        ("K1_6bar", 7, 15),
        ("K1_5bar", 6, 10),
        ("K5plus", 6, 11),
        ("H7", 7, 15),
        ("W5", 6, 10),
        ("C5", 5, 5),
        ("K7", 7, 21),
        ("K8", 8, 28),
    ],
)
def test_pattern_sizes(name: str, n: int, m: int):
    """
    Test vertex and edge counts of each entry.

    Args:
        name (str): Pattern name.
        n (int): Expected order.
        m (int): Expected edge count.
    """
    p = get_pattern(name)
    assert p.graph.n == n
    assert p.graph.edge_count() == m
    assert p.provenance


def test_catalog_order():
    """Test fixed ordering and that names are unique."""
    names = pattern_names()
    assert names[:4] == ["K1_6bar", "K1_5bar", "K5plus", "H7"]
    assert len(set(names)) == len(catalog())


def test_h7_structure():
    """Test that the reconstructed H7 contains K5plus on its first six vertices."""
    h7 = get_pattern("H7").graph
    assert h7.is_clique(0b11111)
    assert h7.neighbourhood(1 << 6) == 0b11110
    assert h7.neighbourhood(1 << 5) & 0b11111 == 0b1


def test_unknown_pattern():
    """Test lookup failure."""
    with pytest.raises(PreconditionError):
        get_pattern("K9")
