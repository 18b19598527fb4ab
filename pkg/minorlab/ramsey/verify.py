"""
Machine checks for small Ramsey numbers R(3,k).

Lower bounds are certified by a triangle-free graph on R(3,k) - 1 vertices with
independence number k - 1; upper bounds by exhausting all (k=3) or all
triangle-free (k=4) graphs of order R(3,k).
"""

import time
from typing import List, Tuple

from minorlab.core.constants import R3_VALUES
from minorlab.core.errors import RamseyRangeError, VerificationError
from minorlab.core.logging import get_logger
from minorlab.graphcore.generate import generate_triangle_free
from minorlab.graphcore.graph import Graph, all_pairs, complement, has_triangle
from minorlab.invariants.cliques import independence_number
from minorlab.utils.parallel import run_parallel

logger = get_logger(__name__)

LOWER_WITNESS_RANGE = (3, 4, 5)
UPPER_CHECK_RANGE = (3, 4)

_SIX_VERTEX_PAIRS = all_pairs(6)
_SHARDS = 16


def circulant(n: int, connection: List[int]) -> Graph:
    """
    Circulant graph: i ~ j iff (j - i) mod n is in the connection set.

    Args:
        n (int): Order.
        connection (List[int]): Offsets, closed under negation.

    Returns:
        Graph: The circulant.
    """
    steps = {d % n for d in connection}
    return Graph.from_edges(n, [(i, j) for i, j in all_pairs(n) if (j - i) % n in steps])


def _search_lower_witness(k: int) -> Graph:
    if k == 3:
        return Graph.cycle(5)
    if k == 4:
        for g in generate_triangle_free(R3_VALUES[4] - 1):
            if independence_number(g) == 3:
                return g
        raise VerificationError("no 8-vertex triangle-free graph with independence number 3")
    return circulant(13, [1, -1, 5, -5])


def verify_lower_witness(k: int) -> Graph:
    """
    A verified witness for R(3,k) > R(3,k) - 1.

    Args:
        k (int): 3, 4 or 5.

    Returns:
        Graph: Triangle-free, R(3,k) - 1 vertices, independence number k - 1.

    Raises:
        RamseyRangeError: For other k.
        VerificationError: If the witness fails its checks.
    """
    if k not in LOWER_WITNESS_RANGE:
        raise RamseyRangeError("verify_lower_witness", k, list(LOWER_WITNESS_RANGE))
    g = _search_lower_witness(k)
    alpha = independence_number(g)
    if g.n != R3_VALUES[k] - 1 or has_triangle(g) or alpha != k - 1:
        raise VerificationError(
            f"lower witness for R(3,{k}) failed",
            {"k": k, "n": g.n, "alpha": alpha},
        )
    return g


def _scan_six_vertex_shard(bounds: Tuple[int, int]) -> bool:
    """Whether every 6-vertex labelled graph with code in [lo, hi) has a triangle or an independent triple."""
    lo, hi = bounds
    for code in range(lo, hi):
        g = Graph.from_edges(6, [pair for i, pair in enumerate(_SIX_VERTEX_PAIRS) if code >> i & 1])
        if not has_triangle(g) and not has_triangle(complement(g)):
            return False
    return True


def verify_upper_small(k: int, jobs: int = 1) -> bool:
    """
    Exhaustively confirm R(3,k) <= value for k = 3, 4.

    k = 3 scans all 2^15 labelled graphs on six vertices (sharded across `jobs`
    workers); k = 4 scans every triangle-free class on nine vertices.

    Args:
        k (int): 3 or 4.
        jobs (int): Worker processes for the k = 3 scan.

    Returns:
        bool: True when no graph escapes the bound.

    Raises:
        RamseyRangeError: For other k.
    """
    if k not in UPPER_CHECK_RANGE:
        raise RamseyRangeError("verify_upper_small", k, list(UPPER_CHECK_RANGE))

    started = time.perf_counter()
    if k == 3:
        total = 1 << len(_SIX_VERTEX_PAIRS)
        step = total // _SHARDS
        shards = [(lo, lo + step) for lo in range(0, total, step)]
        ok = all(run_parallel(_scan_six_vertex_shard, shards, jobs=jobs, chunksize=1))
        checked = total
    else:
        ok = True
        checked = 0
        for g in generate_triangle_free(R3_VALUES[4]):
            checked += 1
            if independence_number(g) < 4:
                ok = False
                break

    logger.info(
        f"Ramsey upper bound check for R(3,{k})",
        extra={
            "k": k,
            "verified": ok,
            "graphs": checked,
            "duration_ms": round((time.perf_counter() - started) * 1000, 2),
        },
    )
    return ok
