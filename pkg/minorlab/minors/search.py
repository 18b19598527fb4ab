"""
Clique-minor search.

Exact mode builds branch sets one at a time in increasing order of their lowest
vertex (the root). Vertices skipped over as roots are discarded, so every model
is reached through exactly one sequence of roots. For each root the connected
sets inside the still-available vertices are tried smallest first: the root
alone, the root with one neighbour, then larger sets.

Pruning uses a sound bound on the number of further sets: among k sets built
from the available set A, the singletons form a clique and the rest use at least
two vertices each, so k <= (|A| + chi_greedy(A)) / 2.
"""

import time
from typing import Iterator, List, Tuple, Union

from minorlab.core.constants import (
    DEFAULT_EXACT_CAP,
    DEFAULT_MINOR_BUDGET,
    SearchMode,
    SearchStatus,
)
from minorlab.core.errors import BudgetExhaustedError, PreconditionError, SearchCapError
from minorlab.core.logging import get_logger
from minorlab.graphcore.graph import Graph
from minorlab.invariants.cliques import clique_number, greedy_color_count, max_clique
from minorlab.models.certificates import MinorCertificate
from minorlab.models.search import MinorSearchResult
from minorlab.utils.bits import iter_bits, popcount

from .certificate import verify_certificate
from .heuristic import heuristic_clique_minor

logger = get_logger(__name__)


class _BudgetHit(Exception):
    pass


def _connected_sets(g: Graph, root: int, allowed: int, limit: int) -> Iterator[int]:
    """
    Every connected set containing `root` within allowed | {root}, of size at most `limit`, once each.

    A branch that skips a frontier vertex excludes it from all deeper extensions.
    """

    def grow(current: int, excluded: int, size: int) -> Iterator[int]:
        yield current
        if size == limit:
            return
        frontier = g.neighbourhood(current) & allowed & ~excluded
        blocked = excluded
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            yield from grow(current | low, blocked, size + 1)
            blocked |= low

    yield from grow(1 << root, 0, 1)


def _branch_candidates(g: Graph, root: int, allowed: int, limit: int) -> Iterator[int]:
    yield 1 << root
    if limit >= 2:
        for v in iter_bits(g.adj[root] & allowed):
            yield (1 << root) | (1 << v)
    if limit >= 3:
        for s in _connected_sets(g, root, allowed, limit):
            if popcount(s) >= 3:
                yield s


class _ExactSearch:
    """Depth-first branch-set search with a node budget."""

    def __init__(self, g: Graph, t: int, budget: int):
        self.g = g
        self.t = t
        self.budget = budget
        self.nodes = 0
        self.sets: List[int] = []
        self.reach: List[int] = []

    def _bound(self, available: int) -> int:
        return (popcount(available) + greedy_color_count(self.g.adj, available)) // 2

    def run(self) -> bool:
        return self._extend(self.g.vertex_mask)

    def _extend(self, available: int) -> bool:
        need = self.t - len(self.sets)
        if need == 0:
            return True
        if self._bound(available) < need:
            return False
        if any(not reach & available for reach in self.reach):
            return False

        rest = available
        while rest:
            low = rest & -rest
            root = low.bit_length() - 1
            rest ^= low
            if popcount(rest) + 1 < need:
                break
            if self._bound(rest | low) < need:
                break
            limit = popcount(rest) + 2 - need
            for s in _branch_candidates(self.g, root, rest, limit):
                self.nodes += 1
                if self.nodes > self.budget:
                    raise _BudgetHit()
                reach = self.g.neighbourhood(s)
                if any(not reach & other for other in self.sets):
                    continue
                self.sets.append(s)
                self.reach.append(reach)
                if self._extend(rest & ~s):
                    return True
                self.sets.pop()
                self.reach.pop()
        return False


def clique_minor_upper_bound(g: Graph) -> int:
    """
    floor((n + omega) / 2), an upper bound on h(G).

    Args:
        g (Graph): Input graph.

    Returns:
        int: Bound on the largest clique minor.
    """
    return (g.n + clique_number(g)) // 2


def hadwiger_at_least(
    g: Graph,
    t: int,
    mode: Union[SearchMode, str] = SearchMode.EXACT,
    budget: int = DEFAULT_MINOR_BUDGET,
    exact_cap: int = DEFAULT_EXACT_CAP,
) -> MinorSearchResult:
    """
    Decide whether g has a K_t minor.

    Args:
        g (Graph): Host graph.
        t (int): Target order, 0 <= t <= n.
        mode (Union[SearchMode, str]): Exact search or the contraction heuristic.
        budget (int): Node limit for the exact search.
        exact_cap (int): Largest order accepted in exact mode.

    Returns:
        MinorSearchResult: found with a verified certificate; exhausted (exact
            mode only) when no K_t minor exists; unknown when the budget runs out
            or the heuristic fails.

    Raises:
        PreconditionError: If t is negative or larger than n.
        SearchCapError: If exact mode is requested for n > exact_cap.
    """
    mode = SearchMode(mode)
    if t < 0 or t > g.n:
        raise PreconditionError(
            f"clique minor order {t} outside 0..{g.n}", {"t": t, "n": g.n}
        )
    if mode == SearchMode.EXACT and g.n > exact_cap:
        raise SearchCapError("hadwiger_at_least", g.n, exact_cap)

    clique = max_clique(g)
    if len(clique) >= t:
        cert = MinorCertificate(sets=[[v] for v in clique[:t]])
        return MinorSearchResult(status=SearchStatus.FOUND, target=t, mode=mode, certificate=cert)

    if mode == SearchMode.HEURISTIC:
        cert, restarts = heuristic_clique_minor(g, t)
        if cert is None:
            return MinorSearchResult(
                status=SearchStatus.UNKNOWN,
                target=t,
                mode=mode,
                nodes=restarts,
                reason=f"heuristic found no K{t} minor in {restarts} restarts",
            )
        return MinorSearchResult(
            status=SearchStatus.FOUND, target=t, mode=mode, certificate=cert, nodes=restarts
        )

    if (g.n + len(clique)) // 2 < t:
        return MinorSearchResult(status=SearchStatus.EXHAUSTED, target=t, mode=mode)

    search = _ExactSearch(g, t, budget)
    start = time.perf_counter()
    try:
        found = search.run()
    except _BudgetHit:
        logger.info(
            "Minor search budget exhausted",
            extra={"n": g.n, "t": t, "budget": budget},
        )
        return MinorSearchResult(
            status=SearchStatus.UNKNOWN,
            target=t,
            mode=mode,
            nodes=search.nodes,
            reason=f"node budget {budget} exhausted",
        )
    logger.debug(
        "Exact minor search finished",
        extra={
            "n": g.n,
            "t": t,
            "found": found,
            "nodes": search.nodes,
            "duration_ms": round((time.perf_counter() - start) * 1000, 2),
        },
    )
    if not found:
        return MinorSearchResult(
            status=SearchStatus.EXHAUSTED, target=t, mode=mode, nodes=search.nodes
        )
    cert = MinorCertificate.from_masks(search.sets)
    verify_certificate(g, cert)
    return MinorSearchResult(
        status=SearchStatus.FOUND, target=t, mode=mode, certificate=cert, nodes=search.nodes
    )


def hadwiger_number(
    g: Graph,
    budget: int = DEFAULT_MINOR_BUDGET,
    exact_cap: int = DEFAULT_EXACT_CAP,
) -> Tuple[int, MinorCertificate]:
    """
    h(G) with a witnessing model.

    Starts from a maximum clique and raises t until the exact search is exhausted.

    Args:
        g (Graph): Graph with at most `exact_cap` vertices.
        budget (int): Node limit per exact search.
        exact_cap (int): Largest accepted order.

    Returns:
        Tuple[int, MinorCertificate]: h(G) and a K_h model.

    Raises:
        SearchCapError: If n > exact_cap.
        BudgetExhaustedError: If some search ran out of budget.
    """
    if g.n > exact_cap:
        raise SearchCapError("hadwiger_number", g.n, exact_cap)
    best = MinorCertificate(sets=[[v] for v in max_clique(g)])
    while best.size < g.n:
        result = hadwiger_at_least(g, best.size + 1, SearchMode.EXACT, budget, exact_cap)
        if result.status == SearchStatus.EXHAUSTED:
            break
        if result.status == SearchStatus.UNKNOWN:
            raise BudgetExhaustedError(
                f"budget exhausted while testing K{best.size + 1}",
                {"t": best.size + 1, "budget": budget},
            )
        assert result.certificate is not None
        best = result.certificate
    return best.size, best
