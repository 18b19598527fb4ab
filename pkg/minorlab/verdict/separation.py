"""
Minimum vertex cuts of graphs with independence number at most two.

Removing a cut leaves exactly two components and both are cliques, since two
non-adjacent vertices in one component and any vertex of the other would be
independent.
"""

from itertools import combinations
from typing import Optional

from minorlab.core.errors import PreconditionError, VerificationError
from minorlab.graphcore.graph import Graph
from minorlab.invariants.cliques import alpha_at_most_2
from minorlab.models.audit import SeparationStructure
from minorlab.utils.bits import lowest, mask_of, members, popcount


def find_clique_separation(g: Graph, min_large_component: int = 0) -> Optional[SeparationStructure]:
    """
    A minimum vertex cut T with components F1 and F2.

    Cuts are tried by size, then lexicographically. F1 is the larger component;
    on equal sizes it is the one holding the lower vertex.

    Args:
        g (Graph): Graph with alpha <= 2.
        min_large_component (int): Only accept cuts with |F1| at least this.

    Returns:
        Optional[SeparationStructure]: The cut, or None when none exists.

    Raises:
        PreconditionError: If alpha(g) > 2.
    """
    if not alpha_at_most_2(g):
        raise PreconditionError("find_clique_separation needs alpha <= 2", {"n": g.n})

    for size in range(0, max(g.n - 1, 0)):
        for cut in combinations(range(g.n), size):
            t = mask_of(cut)
            parts = g.components(g.vertex_mask & ~t)
            if len(parts) < 2:
                continue
            if len(parts) > 2:
                raise VerificationError("more than two components after a cut", {"cut": list(cut)})
            a, b = parts
            if popcount(b) > popcount(a) or (popcount(b) == popcount(a) and lowest(b) < lowest(a)):
                a, b = b, a
            if popcount(a) < min_large_component:
                continue
            if not (g.is_clique(a) and g.is_clique(b)):
                raise VerificationError("separation component is not a clique", {"cut": list(cut)})
            return SeparationStructure(t=list(cut), f1=members(a), f2=members(b))
    return None
