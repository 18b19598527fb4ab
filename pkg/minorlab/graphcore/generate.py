"""
Triangle-free graph generation, one graph per isomorphism class.

Level m+1 is built from the classes of level m by adding a vertex whose
neighbourhood S is an independent set and whose degree |S| is maximum in the
new graph. Every triangle-free graph arises this way (delete a vertex of
maximum degree), and canonical forms remove the duplicates.
"""

import time
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from minorlab.core.constants import TRIANGLE_FREE_MAX_ORDER
from minorlab.core.errors import PreconditionError
from minorlab.core.logging import get_logger
from minorlab.utils.bits import popcount

from .canonical import canonical_label
from .graph import Graph, complement

logger = get_logger(__name__)


def _independent_sets(g: Graph) -> List[int]:
    out: List[int] = []

    def grow(start: int, chosen: int, blocked: int) -> None:
        out.append(chosen)
        for v in range(start, g.n):
            if not (blocked >> v) & 1:
                grow(v + 1, chosen | (1 << v), blocked | g.adj[v] | (1 << v))

    grow(0, 0, 0)
    return out


def _augmentations(h: Graph) -> Iterator[Graph]:
    m = h.n
    degrees = h.degrees()
    for s in _independent_sets(h):
        size = popcount(s)
        if any(degrees[w] + ((s >> w) & 1) > size for w in range(m)):
            continue
        rows = [row | (((s >> w) & 1) << m) for w, row in enumerate(h.adj)]
        rows.append(s)
        yield Graph(m + 1, tuple(rows))


@lru_cache(maxsize=None)
def _classes(n: int) -> Tuple[Graph, ...]:
    if n == 1:
        return (Graph.empty(1),)

    started = time.perf_counter()
    seen: Dict[bytes, Graph] = {}
    for h in _classes(n - 1):
        for g in _augmentations(h):
            form = canonical_label(g)
            if form.data not in seen:
                seen[form.data] = form.graph()

    logger.info(
        f"Generated triangle-free classes on {n} vertices",
        extra={"n": n, "classes": len(seen), "duration_ms": (time.perf_counter() - started) * 1000},
    )
    return tuple(seen[key] for key in sorted(seen))


def generate_triangle_free(n: int) -> Iterator[Graph]:
    """
    Stream triangle-free graphs on n vertices, one per isomorphism class.

    Graphs are canonical representatives, ordered by canonical form.

    Args:
        n (int): Order, 1 <= n <= 10.

    Yields:
        Graph: Pairwise non-isomorphic triangle-free graphs.

    Raises:
        PreconditionError: If n is out of range.
    """
    if not 1 <= n <= TRIANGLE_FREE_MAX_ORDER:
        raise PreconditionError(
            f"generate_triangle_free supports 1 <= n <= {TRIANGLE_FREE_MAX_ORDER}, got {n}",
            {"n": n},
        )
    yield from _classes(n)


def generate_alpha2(n: int) -> Iterator[Graph]:
    """Graphs with independence number at most two: complements of triangle-free classes."""
    for g in generate_triangle_free(n):
        yield complement(g)
