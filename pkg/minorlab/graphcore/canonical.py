"""
Canonical labelling by partition refinement and individualisation.

The canonical form is the graph6 encoding of the relabelling whose
upper-triangle bit string is lexicographically largest among the leaves of
the refinement search tree. Twin vertices (N(u) - v == N(v) - u) are
swapped by an automorphism fixing everything else, so only one of them is
individualised per cell.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from minorlab.core.constants import CANONICAL_MAX_ORDER
from minorlab.core.errors import GraphSizeError
from minorlab.utils.bits import mask_of, popcount

from .graph import Graph, permute
from .graph6 import graph6_decode, graph6_encode

Cells = List[List[int]]


@dataclass(frozen=True, slots=True)
class CanonicalForm:
    """Encoding of an isomorphism class; equal forms iff isomorphic graphs."""

    data: bytes

    def graph(self) -> Graph:
        """The canonical representative."""
        return graph6_decode(self.data)


def _refine(g: Graph, cells: Cells) -> Cells:
    """Split cells by neighbour counts into each other cell until equitable."""
    while True:
        for splitter_cell in cells:
            splitter = mask_of(splitter_cell)
            refined: Cells = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    refined.append(cell)
                    continue
                groups: Dict[int, List[int]] = {}
                for v in cell:
                    groups.setdefault(popcount(g.adj[v] & splitter), []).append(v)
                if len(groups) > 1:
                    split = True
                    refined.extend(groups[count] for count in sorted(groups))
                else:
                    refined.append(cell)
            if split:
                cells = refined
                break
        else:
            return cells


def _twins(g: Graph, u: int, v: int) -> bool:
    strip = ~((1 << u) | (1 << v))
    return (g.adj[u] & strip) == (g.adj[v] & strip)


def _leaf_key(g: Graph, order: List[int]) -> int:
    key = 0
    for j in range(1, g.n):
        row = g.adj[order[j]]
        for i in range(j):
            key = (key << 1) | ((row >> order[i]) & 1)
    return key


def _search(g: Graph, cells: Cells, best: List[Optional[Tuple[int, List[int]]]]) -> None:
    cells = _refine(g, cells)
    target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
    if target is None:
        order = [cell[0] for cell in cells]
        key = _leaf_key(g, order)
        if best[0] is None or key > best[0][0]:
            best[0] = (key, order)
        return

    cell = cells[target]
    tried: List[int] = []
    for v in sorted(cell):
        if any(_twins(g, v, u) for u in tried):
            continue
        tried.append(v)
        rest = [w for w in cell if w != v]
        _search(g, cells[:target] + [[v], rest] + cells[target + 1:], best)


def canonical_order(g: Graph) -> List[int]:
    """
    Vertex order of the canonical relabelling: position i holds an original vertex.

    Args:
        g (Graph): Graph with at most 16 vertices.

    Returns:
        List[int]: Original vertex ids in canonical order.

    Raises:
        GraphSizeError: If n > 16.
    """
    if g.n > CANONICAL_MAX_ORDER:
        raise GraphSizeError("canonical_label", g.n, CANONICAL_MAX_ORDER)
    if g.n == 0:
        return []
    best: List[Optional[Tuple[int, List[int]]]] = [None]
    _search(g, [list(range(g.n))], best)
    assert best[0] is not None
    return best[0][1]


def canonical_graph(g: Graph) -> Graph:
    """Canonical representative of g's isomorphism class."""
    order = canonical_order(g)
    perm = [0] * g.n
    for position, v in enumerate(order):
        perm[v] = position
    return permute(g, perm)


def canonical_label(g: Graph) -> CanonicalForm:
    """
    Isomorphism-invariant encoding of g.

    Args:
        g (Graph): Graph with at most 16 vertices.

    Returns:
        CanonicalForm: Equal for two graphs iff they are isomorphic.
    """
    return CanonicalForm(graph6_encode(canonical_graph(g)).encode("ascii"))
