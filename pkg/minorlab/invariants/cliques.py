"""
Maximum clique by branch and bound over bit sets.

Vertices are relabelled into degeneracy order (last removed first), and a
greedy colouring of the candidate set bounds the clique that can still be
added. Ties are broken by lowest vertex id.
"""

from typing import List, Optional, Sequence

from minorlab.core.constants import INDEPENDENCE_MAX_ORDER
from minorlab.core.errors import GraphSizeError
from minorlab.graphcore.graph import Graph, complement, has_triangle
from minorlab.utils.bits import iter_bits, lowest, mask_of, members, popcount


def degeneracy_order(g: Graph, mask: Optional[int] = None) -> List[int]:
    """
    Vertices of G[mask], highest core first.

    Args:
        g (Graph): Host graph.
        mask (Optional[int]): Vertex subset, all vertices by default.

    Returns:
        List[int]: Reverse of the min-degree removal sequence.
    """
    remaining = g.vertex_mask if mask is None else mask
    removed: List[int] = []
    while remaining:
        v = min(iter_bits(remaining), key=lambda w: (popcount(g.adj[w] & remaining), w))
        removed.append(v)
        remaining &= ~(1 << v)
    removed.reverse()
    return removed


def greedy_color_classes(rows: Sequence[int], candidates: int) -> List[tuple]:
    """
    Sequential greedy colouring of a candidate set.

    Args:
        rows (Sequence[int]): Adjacency rows.
        candidates (int): Vertices to colour.

    Returns:
        List[tuple]: (vertex, colour) pairs in non-decreasing colour order, colours from 1.
    """
    out = []
    color = 0
    uncolored = candidates
    while uncolored:
        color += 1
        q = uncolored
        while q:
            v = lowest(q)
            q &= ~rows[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            out.append((v, color))
    return out


def greedy_color_count(rows: Sequence[int], candidates: int) -> int:
    """Number of colours the sequential greedy colouring uses; an upper bound on omega."""
    count = 0
    uncolored = candidates
    while uncolored:
        count += 1
        q = uncolored
        while q:
            v = lowest(q)
            q &= ~rows[v] & ~(1 << v)
            uncolored &= ~(1 << v)
    return count


def max_clique(g: Graph, mask: Optional[int] = None) -> List[int]:
    """
    A maximum clique of G[mask].

    Args:
        g (Graph): Host graph.
        mask (Optional[int]): Vertex subset, all vertices by default.

    Returns:
        List[int]: Clique vertices, ascending.
    """
    order = degeneracy_order(g, mask)
    if not order:
        return []
    position = {v: i for i, v in enumerate(order)}
    rows = [mask_of(position[w] for w in iter_bits(g.adj[v]) if w in position) for v in order]
    best: List[int] = [0, 0]  # [size, clique mask in positions]

    def expand(clique: int, size: int, candidates: int) -> None:
        colored = greedy_color_classes(rows, candidates)
        for v, color in reversed(colored):
            if size + color <= best[0]:
                return
            grown = clique | (1 << v)
            rest = candidates & rows[v]
            if rest:
                expand(grown, size + 1, rest)
            elif size + 1 > best[0]:
                best[0] = size + 1
                best[1] = grown
            candidates &= ~(1 << v)

    expand(0, 0, (1 << len(order)) - 1)
    return sorted(order[p] for p in members(best[1]))


def clique_number(g: Graph) -> int:
    """
    omega(G), exact.

    Args:
        g (Graph): Graph with at most 64 vertices.

    Returns:
        int: Size of a largest clique.
    """
    return len(max_clique(g))


def independence_number(g: Graph) -> int:
    """
    alpha(G), exact.

    Args:
        g (Graph): Graph with at most 32 vertices.

    Returns:
        int: Size of a largest independent set.

    Raises:
        GraphSizeError: If n > 32.
    """
    if g.n > INDEPENDENCE_MAX_ORDER:
        raise GraphSizeError("independence_number", g.n, INDEPENDENCE_MAX_ORDER)
    return clique_number(complement(g))


def alpha_at_most_2(g: Graph) -> bool:
    """Whether no three vertices are pairwise nonadjacent (complement triangle-free)."""
    return not has_triangle(complement(g))
