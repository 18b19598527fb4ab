"""
Randomised contraction heuristic for clique minors on graphs beyond the exact cap.

Each restart contracts a random partial matching, takes a maximum clique of the
quotient graph as a model, then grows it with leftover vertices or edges that
touch every branch set. Restarts are driven by one seeded generator, so results
are reproducible.
"""

import random
from typing import List, Optional, Tuple

from minorlab.core.constants import HEURISTIC_RESTARTS_PER_VERTEX, HEURISTIC_SEED
from minorlab.core.logging import get_logger
from minorlab.graphcore.graph import Graph, quotient
from minorlab.invariants.cliques import max_clique
from minorlab.models.certificates import MinorCertificate
from minorlab.utils.bits import iter_bits, lowest

from .certificate import verify_certificate

logger = get_logger(__name__)


def _random_units(g: Graph, edges: List[Tuple[int, int]], pairs: int) -> List[int]:
    """Up to `pairs` disjoint edges taken greedily from `edges`, plus all other vertices as singletons."""
    units = []
    matched = 0
    for u, v in edges:
        if len(units) == pairs:
            break
        pair = (1 << u) | (1 << v)
        if not matched & pair:
            units.append(pair)
            matched |= pair
    units.extend(1 << v for v in iter_bits(g.vertex_mask & ~matched))
    return units


def _touches_all(g: Graph, candidate: int, sets: List[int]) -> bool:
    reach = g.neighbourhood(candidate)
    return all(reach & s for s in sets)


def _repair(g: Graph, sets: List[int]) -> List[int]:
    """Append leftover singletons, then leftover edges, adjacent to every set until none fit."""
    sets = list(sets)
    used = 0
    for s in sets:
        used |= s
    changed = True
    while changed:
        changed = False
        free = g.vertex_mask & ~used
        for v in iter_bits(free):
            if _touches_all(g, 1 << v, sets):
                sets.append(1 << v)
                used |= 1 << v
                changed = True
                break
        if changed:
            continue
        for v in iter_bits(free):
            for w in iter_bits(g.adj[v] & free):
                if w < v:
                    continue
                pair = (1 << v) | (1 << w)
                if _touches_all(g, pair, sets):
                    sets.append(pair)
                    used |= pair
                    changed = True
                    break
            if changed:
                break
    return sets


def heuristic_clique_minor(
    g: Graph,
    t: int,
    seed: int = HEURISTIC_SEED,
    restarts: Optional[int] = None,
) -> Tuple[Optional[MinorCertificate], int]:
    """
    Look for a K_t model by random matching contraction.

    Args:
        g (Graph): Host graph.
        t (int): Target order.
        seed (int): Generator seed.
        restarts (Optional[int]): Restart limit, 10 per vertex by default.

    Returns:
        Tuple[Optional[MinorCertificate], int]: A verified model with exactly t
            sets (or None) and the number of restarts spent.
    """
    if restarts is None:
        restarts = HEURISTIC_RESTARTS_PER_VERTEX * g.n
    rng = random.Random(seed)
    edges = g.edges()
    best = 0
    for r in range(restarts):
        rng.shuffle(edges)
        units = _random_units(g, edges, r % (g.n // 2 + 1))
        sets = [units[i] for i in max_clique(quotient(g, units))]
        sets = _repair(g, sets)
        best = max(best, len(sets))
        if len(sets) >= t:
            chosen = sorted(sets, key=lowest)[:t]
            cert = MinorCertificate.from_masks(chosen)
            verify_certificate(g, cert)
            logger.debug(
                "Heuristic found clique minor",
                extra={"n": g.n, "t": t, "restarts": r + 1},
            )
            return cert, r + 1
    logger.debug(
        "Heuristic gave up",
        extra={"n": g.n, "t": t, "restarts": restarts, "best": best},
    )
    return None, restarts
