"""
Named small graphs H for which H-free graphs with alpha <= 2 are known to satisfy HC.

Vertex lists are 0-based; unlisted pairs are non-edges.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Tuple

from minorlab.core.errors import PreconditionError
from minorlab.graphcore.graph import Graph


@dataclass(frozen=True, slots=True)
class Pattern:
    """A catalog entry."""

    name: str
    graph: Graph
    provenance: str


def _clique_edges(vertices: range) -> List[Tuple[int, int]]:
    return list(combinations(vertices, 2))


def _build() -> Tuple[Pattern, ...]:
    k5 = _clique_edges(range(5))
    c5 = [(i, (i + 1) % 5) for i in range(5)]
    return (
        Pattern(
            "K1_6bar",
            Graph.from_edges(7, _clique_edges(range(6))),
            "complement of K_{1,6}: K6 plus an isolated vertex; H-free iff delta >= n-6",
        ),
        Pattern(
            "K1_5bar",
            Graph.from_edges(6, _clique_edges(range(5))),
            "complement of K_{1,5}: K5 plus an isolated vertex",
        ),
        Pattern(
            "K5plus",
            Graph.from_edges(6, k5 + [(0, 5)]),
            "K5 plus a pendant vertex 5 attached to 0",
        ),
        Pattern(
            "H7",
            Graph.from_edges(7, k5 + [(0, 5), (1, 6), (2, 6), (3, 6), (4, 6)]),
            "K5plus (u=0, v=5) plus w=6 adjacent to the K5 minus u; reconstructed from the"
            " dominating-edge argument, not from a drawing",
        ),
        Pattern(
            "W5",
            Graph.from_edges(6, c5 + [(i, 5) for i in range(5)]),
            "5-wheel: C5 on 0..4 plus hub 5",
        ),
        Pattern("C5", Graph.from_edges(5, c5), "5-cycle"),
        Pattern("K7", Graph.complete(7), "complete graph on 7 vertices"),
        Pattern("K8", Graph.complete(8), "complete graph on 8 vertices"),
    )


@lru_cache(maxsize=1)
def _catalog() -> Tuple[Pattern, ...]:
    return _build()


def catalog() -> List[Pattern]:
    """
    The pattern catalog in fixed order.

    Returns:
        List[Pattern]: K1_6bar, K1_5bar, K5plus, H7, W5, C5, K7, K8.
    """
    return list(_catalog())


def pattern_names() -> List[str]:
    """Catalog names in order."""
    return [p.name for p in _catalog()]


def get_pattern(name: str) -> Pattern:
    """
    Look up a catalog entry by name.

    Args:
        name (str): Pattern name.

    Returns:
        Pattern: The entry.

    Raises:
        PreconditionError: If the name is unknown.
    """
    by_name: Dict[str, Pattern] = {p.name: p for p in _catalog()}
    try:
        return by_name[name]
    except KeyError:
        raise PreconditionError(
            f"unknown pattern '{name}'", {"name": name, "known": list(by_name)}
        ) from None
