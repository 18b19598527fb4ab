"""
Connected dominating matchings and the contraction that halves the HC check.

A matching M is a connected dominating matching when every two of its edges are
joined by a host edge and each edge is adjacent to every vertex outside V(M).
Contracting M and adding one branch set per edge to any clique-minor model of
G - V(M) gives a model of G with |M| more sets.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from minorlab.core.constants import (
    DEFAULT_EXACT_CAP,
    DEFAULT_MINOR_BUDGET,
    SearchMode,
    SearchStatus,
)
from minorlab.core.errors import CertificateError, InvalidMatchingError
from minorlab.core.logging import get_logger
from minorlab.graphcore.graph import Edge, Graph, induced_subgraph, quotient
from minorlab.models.certificates import DominatingMatching, MinorCertificate
from minorlab.utils.bits import iter_bits, lowest, members, popcount

from .certificate import verify_certificate
from .search import hadwiger_at_least

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class MatchingReduction:
    """Host graph with every matching edge contracted."""

    matching: DominatingMatching
    reduced: Graph
    origins: Tuple[Tuple[int, ...], ...]


def _edge_mask(edge: Edge) -> int:
    return (1 << edge[0]) | (1 << edge[1])


def _missed(g: Graph, edge: Edge) -> int:
    """Vertices other than the ends that neither end is adjacent to."""
    pair = _edge_mask(edge)
    return g.vertex_mask & ~pair & ~(g.adj[edge[0]] | g.adj[edge[1]])


def _joined(g: Graph, e: Edge, f: Edge) -> bool:
    return bool((g.adj[e[0]] | g.adj[e[1]]) & _edge_mask(f))


def check_dominating_matching(g: Graph, m: DominatingMatching) -> None:
    """
    Validate a connected dominating matching.

    Args:
        g (Graph): Host graph.
        m (DominatingMatching): Candidate matching.

    Raises:
        InvalidMatchingError: Naming the first failed condition.
    """
    covered = 0
    for edge in m.edges:
        u, v = edge
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise InvalidMatchingError(f"{edge} is not a host edge", {"edge": list(edge)})
        if covered & _edge_mask(edge):
            raise InvalidMatchingError(
                f"{edge} shares a vertex with another edge", {"edge": list(edge)}
            )
        covered |= _edge_mask(edge)
    for i, e in enumerate(m.edges):
        for f in m.edges[i + 1 :]:
            if not _joined(g, e, f):
                raise InvalidMatchingError(
                    f"edges {e} and {f} are not joined", {"edges": [list(e), list(f)]}
                )
    for edge in m.edges:
        outside = _missed(g, edge) & ~covered
        if outside:
            raise InvalidMatchingError(
                f"edge {edge} does not dominate {members(outside)}",
                {"edge": list(edge), "missed": members(outside)},
            )


def is_connected_dominating_matching(g: Graph, m: DominatingMatching) -> bool:
    """check_dominating_matching as a predicate."""
    try:
        check_dominating_matching(g, m)
    except InvalidMatchingError:
        return False
    return True


def find_connected_dominating_matching(
    g: Graph, max_size: int = 3
) -> Optional[DominatingMatching]:
    """
    A smallest connected dominating matching with at most `max_size` edges.

    Sizes are tried in increasing order, so a dominating edge is returned when
    one exists; within a size the lexicographically first edge list wins. An
    edge can only belong to a size-k matching if it misses at most 2(k-1)
    vertices, since everything it misses must lie in V(M).

    Args:
        g (Graph): Host graph.
        max_size (int): Largest matching size to try.

    Returns:
        Optional[DominatingMatching]: The matching, or None.
    """
    edges = g.edges()
    missed = {edge: _missed(g, edge) for edge in edges}

    for size in range(1, max_size + 1):
        pool = [edge for edge in edges if popcount(missed[edge]) <= 2 * (size - 1)]
        chosen: List[Edge] = []

        def pick(start: int, covered: int, required: int) -> bool:
            if len(chosen) == size:
                return not required & ~covered
            if popcount(required & ~covered) > 2 * (size - len(chosen)):
                return False
            for i in range(start, len(pool)):
                edge = pool[i]
                if covered & _edge_mask(edge):
                    continue
                if not all(_joined(g, edge, other) for other in chosen):
                    continue
                chosen.append(edge)
                if pick(i + 1, covered | _edge_mask(edge), required | missed[edge]):
                    return True
                chosen.pop()
            return False

        if len(pool) >= size and pick(0, 0, 0):
            return DominatingMatching(edges=list(chosen))
    return None


def build_reduction(g: Graph, m: DominatingMatching) -> MatchingReduction:
    """
    Contract every edge of a connected dominating matching.

    Reduced vertices are ordered by their lowest host vertex.

    Args:
        g (Graph): Host graph.
        m (DominatingMatching): A valid matching.

    Returns:
        MatchingReduction: Reduced graph and origin map.

    Raises:
        InvalidMatchingError: If m is not a connected dominating matching.
    """
    check_dominating_matching(g, m)
    matched = m.vertex_mask()
    parts = [_edge_mask(edge) for edge in m.edges]
    parts.extend(1 << v for v in iter_bits(g.vertex_mask & ~matched))
    parts.sort(key=lowest)
    return MatchingReduction(
        matching=m,
        reduced=quotient(g, parts),
        origins=tuple(tuple(members(p)) for p in parts),
    )


def reduce_and_lift(g: Graph, m: DominatingMatching, inner: MinorCertificate) -> MinorCertificate:
    """
    Extend a model of G - V(M) by one branch set per matching edge.

    Args:
        g (Graph): Host graph.
        m (DominatingMatching): A valid matching.
        inner (MinorCertificate): Model of G - V(M), in host vertex ids.

    Returns:
        MinorCertificate: Model of g with |inner| + |m| sets.

    Raises:
        InvalidMatchingError: If m is not a connected dominating matching.
        CertificateError: If inner is invalid or touches V(M).
    """
    check_dominating_matching(g, m)
    matched = m.vertex_mask()
    for i, mask in enumerate(inner.masks()):
        if mask & matched:
            raise CertificateError(
                f"inner branch set {i} uses matched vertices",
                {"set": i, "matched": members(mask & matched)},
            )
    verify_certificate(g, inner)
    lifted = MinorCertificate(sets=[list(s) for s in inner.sets] + [list(e) for e in m.edges])
    verify_certificate(g, lifted)
    return lifted


def lemma2_certificate(
    g: Graph,
    m: DominatingMatching,
    budget: int = DEFAULT_MINOR_BUDGET,
    exact_cap: int = DEFAULT_EXACT_CAP,
) -> Optional[MinorCertificate]:
    """
    Try for a K_ceil(n/2) model of g through m.

    Runs the exact search for K_ceil((n - 2|M|)/2) on G - V(M) and lifts the result.

    Args:
        g (Graph): Host graph.
        m (DominatingMatching): A valid matching.
        budget (int): Node limit for the inner search.
        exact_cap (int): Largest order for the inner exact search.

    Returns:
        Optional[MinorCertificate]: A model with at least ceil(n/2) sets, or None
            when the inner search does not reach its target.
    """
    check_dominating_matching(g, m)
    rest = g.vertex_mask & ~m.vertex_mask()
    inner_graph = induced_subgraph(g, rest)
    target = (inner_graph.n + 1) // 2
    result = hadwiger_at_least(inner_graph, target, SearchMode.EXACT, budget, exact_cap)
    if result.status != SearchStatus.FOUND or result.certificate is None:
        logger.debug(
            "Inner search did not reach target",
            extra={"n": g.n, "target": target, "status": result.status.value},
        )
        return None
    host_ids = members(rest)
    inner = MinorCertificate(sets=[[host_ids[v] for v in s] for s in result.certificate.sets])
    return reduce_and_lift(g, m, inner)
