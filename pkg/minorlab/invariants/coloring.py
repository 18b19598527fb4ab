"""
Chromatic number: exact DSATUR search, and the matching identity for alpha <= 2.
"""

from typing import List, Optional

from minorlab.core.constants import CHROMATIC_MAX_ORDER
from minorlab.core.errors import GraphSizeError, PreconditionError
from minorlab.core.logging import get_logger
from minorlab.graphcore.graph import Graph, complement
from minorlab.models.certificates import ColoringCert
from minorlab.utils.bits import iter_bits, popcount

from .cliques import alpha_at_most_2, clique_number
from .matching import max_matching

logger = get_logger(__name__)


def _k_coloring(g: Graph, k: int) -> Optional[List[int]]:
    """DSATUR backtracking: a proper k-colouring using every colour, or None."""
    n = g.n
    colors = [-1] * n
    saturation = [0] * n
    degrees = g.degrees()

    def choose() -> int:
        best = -1
        best_key = (-1, -1)
        for v in range(n):
            if colors[v] == -1:
                key = (popcount(saturation[v]), degrees[v])
                if key > best_key:
                    best, best_key = v, key
        return best

    def backtrack(colored: int, used: int) -> bool:
        if colored == n:
            return used == k
        # not enough vertices left to open the missing colours
        if k - used > n - colored:
            return False
        v = choose()
        allowed = ~saturation[v] & ((1 << min(used + 1, k)) - 1)
        for c in iter_bits(allowed):
            colors[v] = c
            touched = []
            for w in iter_bits(g.adj[v]):
                if colors[w] == -1 and not (saturation[w] >> c) & 1:
                    saturation[w] |= 1 << c
                    touched.append(w)
            if backtrack(colored + 1, max(used, c + 1)):
                return True
            for w in touched:
                saturation[w] &= ~(1 << c)
        colors[v] = -1
        return False

    return colors if backtrack(0, 0) else None


def chromatic_number_exact(g: Graph) -> ColoringCert:
    """
    A minimum proper colouring, by iterative deepening on k from omega(G).

    Args:
        g (Graph): Graph with at most 20 vertices.

    Returns:
        ColoringCert: Optimal colouring; k = chi(G).

    Raises:
        GraphSizeError: If n > 20.
    """
    if g.n > CHROMATIC_MAX_ORDER:
        raise GraphSizeError("chromatic_number_exact", g.n, CHROMATIC_MAX_ORDER)
    if g.n == 0:
        return ColoringCert(colors=[], k=0)

    k = clique_number(g)
    while True:
        colors = _k_coloring(g, k)
        if colors is not None:
            return ColoringCert(colors=colors, k=k)
        logger.debug(f"No proper {k}-colouring", extra={"n": g.n, "k": k})
        k += 1


def chromatic_alpha2(g: Graph) -> ColoringCert:
    """
    Optimal colouring of a graph with alpha(G) <= 2 via chi(G) = |G| - nu(complement).

    Colour classes are the pairs of a maximum matching of the complement plus
    singletons; colours are assigned in order of each class's lowest vertex.

    Args:
        g (Graph): Graph with independence number at most two.

    Returns:
        ColoringCert: Colouring with n - nu(complement) colours.

    Raises:
        PreconditionError: If alpha(G) > 2.
    """
    if not alpha_at_most_2(g):
        raise PreconditionError("chromatic_alpha2 requires alpha(G) <= 2", {"n": g.n})

    partner = [-1] * g.n
    for u, v in max_matching(complement(g)).edges:
        partner[u], partner[v] = v, u

    colors = [-1] * g.n
    k = 0
    for v in range(g.n):
        if colors[v] == -1:
            colors[v] = k
            if partner[v] != -1:
                colors[partner[v]] = k
            k += 1
    return ColoringCert(colors=colors, k=k)
