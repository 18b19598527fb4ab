"""
Induced-subgraph containment by backtracking with bit-mask candidate filtering.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from minorlab.core.constants import PATTERN_MAX_ORDER
from minorlab.core.errors import GraphSizeError
from minorlab.graphcore.graph import Graph

from .catalog import Pattern, get_pattern


@dataclass(frozen=True, slots=True)
class Embedding:
    """Injective map pattern vertex i -> host vertex images[i]."""

    images: Tuple[int, ...]

    def verify(self, g: Graph, p: Pattern) -> bool:
        """
        Whether the map preserves both edges and non-edges.

        Args:
            g (Graph): Host graph.
            p (Pattern): Pattern.

        Returns:
            bool: True for an induced embedding.
        """
        h = p.graph
        if len(self.images) != h.n or len(set(self.images)) != h.n:
            return False
        if any(not 0 <= x < g.n for x in self.images):
            return False
        for i in range(h.n):
            for j in range(i + 1, h.n):
                if h.has_edge(i, j) != g.has_edge(self.images[i], self.images[j]):
                    return False
        return True


def contains_induced(g: Graph, p: Pattern) -> Optional[Embedding]:
    """
    Find an induced copy of p in g.

    Pattern vertices are placed in descending-degree order (ties lowest id);
    each host candidate must agree with every placed vertex on adjacency and
    have at least the pattern vertex's degree.

    Args:
        g (Graph): Host graph.
        p (Pattern): Pattern with at most 8 vertices.

    Returns:
        Optional[Embedding]: The first embedding found, or None.

    Raises:
        GraphSizeError: If the pattern has more than 8 vertices.
    """
    h = p.graph
    if h.n > PATTERN_MAX_ORDER:
        raise GraphSizeError("contains_induced", h.n, PATTERN_MAX_ORDER)
    if h.n > g.n:
        return None

    order = sorted(range(h.n), key=lambda v: (-h.degree(v), v))
    pattern_degrees = h.degrees()
    host_degrees = g.degrees()
    eligible: Dict[int, int] = {}
    for d in set(pattern_degrees):
        eligible[d] = sum(1 << x for x in range(g.n) if host_degrees[x] >= d)

    images = [-1] * h.n

    def place(depth: int, used: int) -> bool:
        if depth == h.n:
            return True
        pv = order[depth]
        candidates = eligible[pattern_degrees[pv]] & ~used
        for earlier in order[:depth]:
            image = images[earlier]
            if h.has_edge(pv, earlier):
                candidates &= g.adj[image]
            else:
                candidates &= ~g.adj[image]
        while candidates:
            low = candidates & -candidates
            x = low.bit_length() - 1
            candidates ^= low
            images[pv] = x
            if place(depth + 1, used | low):
                return True
        images[pv] = -1
        return False

    if place(0, 0):
        return Embedding(tuple(images))
    return None


def is_pattern_free(g: Graph, names: Iterable[str]) -> Dict[str, bool]:
    """
    Report H-freeness of g for each named catalog pattern.

    Args:
        g (Graph): Host graph.
        names (Iterable[str]): Catalog names.

    Returns:
        Dict[str, bool]: name -> True if g has no induced copy.
    """
    return {name: contains_induced(g, get_pattern(name)) is None for name in names}


def free_patterns(g: Graph, names: Iterable[str]) -> List[str]:
    """Names of the listed patterns that g avoids, in the given order."""
    return [name for name, free in is_pattern_free(g, names).items() if free]
