"""
Executable forms of the HC results for graphs with independence number at most two.
"""

from typing import List, Optional, Sequence

from pydantic import BaseModel, Field

from minorlab.core.constants import (
    CHROMATIC_MAX_ORDER,
    DEFAULT_EXACT_CAP,
    DEFAULT_MINOR_BUDGET,
    DEFAULT_PROVEN_PATTERNS,
    K8_CANDIDATE_ORDER,
    R3_VALUES,
    FilterName,
    FilterResult,
    SearchMode,
    SearchStatus,
    VerdictOutcome,
)
from minorlab.core.errors import PreconditionError, SearchCapError
from minorlab.core.logging import get_logger
from minorlab.graphcore.graph import Edge, Graph
from minorlab.invariants.cliques import alpha_at_most_2, clique_number
from minorlab.invariants.coloring import chromatic_alpha2, chromatic_number_exact
from minorlab.minors.search import hadwiger_at_least, hadwiger_number
from minorlab.models.verdict import FilterOutcome, Verdict
from minorlab.patterns.matcher import is_pattern_free
from minorlab.utils.bits import iter_bits, members, popcount

logger = get_logger(__name__)

DELTA22_REASON = "Δ=22: |N₁|+…+|N₄| ≤ 21 < 22"


def hc_verdict(
    g: Graph,
    budget: int = DEFAULT_MINOR_BUDGET,
    exact_cap: int = DEFAULT_EXACT_CAP,
) -> Verdict:
    """
    Decide h(G) >= chi(G) for one graph.

    With alpha <= 2, chi comes from a maximum matching of the complement; other
    graphs need an exact colouring (n <= 20). The minor search is exact up to
    `exact_cap` vertices and heuristic beyond, so a counterexample is only ever
    reported by an exhausted exact search.

    Args:
        g (Graph): Input graph.
        budget (int): Node limit for the exact minor search.
        exact_cap (int): Largest order searched exactly.

    Returns:
        Verdict: holds, counterexample or unknown.
    """
    if alpha_at_most_2(g):
        coloring = chromatic_alpha2(g)
    elif g.n <= CHROMATIC_MAX_ORDER:
        coloring = chromatic_number_exact(g)
    else:
        return Verdict(
            outcome=VerdictOutcome.UNKNOWN,
            reason=f"alpha > 2 and n={g.n} exceeds the exact colouring limit {CHROMATIC_MAX_ORDER}",
        )

    chi = coloring.k
    mode = SearchMode.EXACT if g.n <= exact_cap else SearchMode.HEURISTIC
    result = hadwiger_at_least(g, chi, mode, budget, exact_cap)

    if result.status == SearchStatus.FOUND:
        return Verdict(
            outcome=VerdictOutcome.HOLDS,
            chi=chi,
            certificate=result.certificate,
            coloring=coloring,
            mode=mode,
        )
    if result.status == SearchStatus.EXHAUSTED:
        logger.warning(
            "Potential counterexample",
            extra={"n": g.n, "chi": chi, "edges": g.edge_count()},
        )
        return Verdict(
            outcome=VerdictOutcome.COUNTEREXAMPLE,
            chi=chi,
            coloring=coloring,
            mode=mode,
            exhausted_t=chi,
            reason=f"no K{chi} minor exists",
        )
    return Verdict(
        outcome=VerdictOutcome.UNKNOWN, chi=chi, coloring=coloring, mode=mode, reason=result.reason
    )


def hc2iff_check(
    g: Graph,
    budget: int = DEFAULT_MINOR_BUDGET,
    exact_cap: int = DEFAULT_EXACT_CAP,
) -> bool:
    """
    Check (h >= chi) <=> (h >= ceil(n/2)) from exact h and chi.

    Args:
        g (Graph): Graph with alpha <= 2 and at most `exact_cap` vertices.
        budget (int): Node limit per exact search.
        exact_cap (int): Largest accepted order.

    Returns:
        bool: Whether the equivalence holds for g.

    Raises:
        PreconditionError: If alpha(g) > 2.
        SearchCapError: If n > exact_cap.
    """
    if not alpha_at_most_2(g):
        raise PreconditionError("hc2iff_check needs alpha <= 2", {"n": g.n})
    if g.n > exact_cap:
        raise SearchCapError("hc2iff_check", g.n, exact_cap)
    h, _ = hadwiger_number(g, budget, exact_cap)
    chi = chromatic_alpha2(g).k
    return (h >= chi) == (h >= (g.n + 1) // 2)


def seagull_condition(g: Graph) -> bool:
    """omega >= n/4 for even n, omega >= (n+3)/4 for odd n."""
    omega = clique_number(g)
    if g.n % 2 == 0:
        return 4 * omega >= g.n
    return 4 * omega >= g.n + 3


def lemma1_admissible(n: int) -> bool:
    """Orders a minimal counterexample can have: 27 or at least 29."""
    return n == 27 or n >= 29


def min_degree_cap(g: Graph) -> bool:
    """
    Viability under the minimum-degree bound.

    Graphs with delta >= n-6 satisfy HC, so a counterexample needs delta <= n-7.

    Args:
        g (Graph): Input graph.

    Returns:
        bool: True if g is still a viable counterexample.
    """
    return g.min_degree() <= g.n - 7


def k8_degree_profile_filter(n: int, min_degree: int, max_degree: int) -> FilterOutcome:
    """
    Degree-data test for K8-free counterexamples.

    Only n = 27, delta = 19, Delta in {20, 21} survives. Profiles need not be
    realisable by a graph.

    Args:
        n (int): Order.
        min_degree (int): delta.
        max_degree (int): Delta.

    Returns:
        FilterOutcome: pass, or reject naming the case that kills the profile.

    Raises:
        PreconditionError: If min_degree > max_degree.
    """
    if min_degree > max_degree:
        raise PreconditionError(
            "minimum degree exceeds maximum degree",
            {"min_degree": min_degree, "max_degree": max_degree},
        )

    def reject(reason: str) -> FilterOutcome:
        return FilterOutcome(name=FilterName.K8, result=FilterResult.REJECT, reason=reason)

    if n != K8_CANDIDATE_ORDER:
        return reject(
            f"|G|={n}: R(3,8)={R3_VALUES[8]} and minimality leave only |G|={K8_CANDIDATE_ORDER}"
        )
    if max_degree > 22:
        return reject(f"Δ={max_degree} > 22: N(v) holds a K₇ since R(3,7)={R3_VALUES[7]}")
    if min_degree < 19:
        return reject(f"δ={min_degree} < 19: the {n - 1 - min_degree} non-neighbours of v form a clique ≥ K₈")
    if max_degree == 22:
        return reject(DELTA22_REASON)
    if min_degree == max_degree and max_degree % 2 == 1 and n % 2 == 1:
        return reject(f"parity: no {max_degree}-regular graph on {n} vertices")
    if min_degree == 19:
        return FilterOutcome(
            name=FilterName.K8,
            result=FilterResult.PASS,
            reason=f"open case: |G|={n}, δ=19, Δ={max_degree}",
        )
    if max_degree == 21:
        return reject("Δ=21: |N₁|+…+|N₅|+|N| ≤ 19 < 21")
    return reject("Δ=20: an edge of A dominates N₁ ∪ N₂ and forms a connected dominating matching with vx")


def k8_degree_filter(g: Graph) -> FilterOutcome:
    """k8_degree_profile_filter on the order and degree extremes of g."""
    return k8_degree_profile_filter(g.n, g.min_degree(), g.max_degree())


def proven_h_filter(g: Graph, patterns: Sequence[str] = DEFAULT_PROVEN_PATTERNS) -> FilterOutcome:
    """
    Reject graphs that avoid a pattern H for which H-free graphs satisfy HC.

    Args:
        g (Graph): Input graph.
        patterns (Sequence[str]): Catalog names of proven patterns.

    Returns:
        FilterOutcome: reject listing the avoided patterns, else pass.
    """
    avoided = [name for name, free in is_pattern_free(g, patterns).items() if free]
    if avoided:
        return FilterOutcome(
            name=FilterName.PATTERNS,
            result=FilterResult.REJECT,
            reason=f"{', '.join(avoided)}-free",
        )
    return FilterOutcome(name=FilterName.PATTERNS, result=FilterResult.PASS)


class PigeonholeWitness(BaseModel):
    """Outcome of the high-degree vertex argument for one vertex v."""

    v: int
    outside: List[int] = Field(..., description="A = V - N[v]")
    dominating_edge: Optional[Edge] = Field(None, description="vu adjacent to all of A, if any")
    non_edges: int = Field(0, description="Non-edges between N(v) and A")
    w: Optional[int] = Field(None, description="Vertex of A missing the most of N(v)")
    missed: List[int] = Field(default_factory=list, description="Neighbours of v not adjacent to w")
    required: int = Field(0, description="ceil(non_edges / |A|)")


def theorem1_pigeonhole(g: Graph) -> Optional[PigeonholeWitness]:
    """
    Run the high-degree argument on the lowest vertex of degree >= n-6.

    If some neighbour u of v is adjacent to all of A = V - N[v], vu is a
    dominating edge. Otherwise every neighbour misses A somewhere, and by
    pigeonhole some w in A misses at least ceil(non-edges / |A|) neighbours of v.
    With alpha <= 2 those neighbours form a clique, which together with v and w
    gives an induced complement of K_{1,k}.

    Args:
        g (Graph): Input graph.

    Returns:
        Optional[PigeonholeWitness]: None when no vertex has degree >= n-6.
    """
    candidates = [v for v in range(g.n) if g.degree(v) >= g.n - 6]
    if not candidates:
        return None
    v = candidates[0]
    neighbours = g.adj[v]
    outside = g.vertex_mask & ~neighbours & ~(1 << v)

    for u in iter_bits(neighbours):
        if not outside & ~g.adj[u]:
            return PigeonholeWitness(
                v=v, outside=members(outside), dominating_edge=(min(u, v), max(u, v))
            )
    if not outside:
        return PigeonholeWitness(v=v, outside=[])

    non_edges = sum(popcount(neighbours & ~g.adj[a]) for a in iter_bits(outside))
    w = max(iter_bits(outside), key=lambda a: (popcount(neighbours & ~g.adj[a]), -a))
    size = popcount(outside)
    return PigeonholeWitness(
        v=v,
        outside=members(outside),
        non_edges=non_edges,
        w=w,
        missed=members(neighbours & ~g.adj[w]),
        required=-(-non_edges // size),
    )
