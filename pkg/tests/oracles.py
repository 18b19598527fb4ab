"""
Independent reference implementations used by the tests.
"""

import random
from itertools import combinations
from typing import Iterator, List

import networkx as nx

from minorlab.graphcore.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    """networkx copy of g."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    """G(n, p) from a seeded generator."""
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def connected_sets(g: Graph) -> List[frozenset]:
    """Every nonempty vertex set inducing a connected subgraph."""
    whole = to_nx(g)
    out = []
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            if nx.is_connected(whole.subgraph(subset)):
                out.append(frozenset(subset))
    return out


def brute_force_has_clique_minor(g: Graph, t: int) -> bool:
    """Search all families of t disjoint connected sets that pairwise touch."""
    if t == 0:
        return True
    sets = connected_sets(g)
    adj = {v: set(u for u in range(g.n) if g.has_edge(u, v)) for v in range(g.n)}

    def touch(a: frozenset, b: frozenset) -> bool:
        return any(adj[v] & b for v in a)

    by_root = {v: [s for s in sets if min(s) == v] for v in range(g.n)}

    def extend(chosen: List[frozenset], used: frozenset, low: int) -> bool:
        if len(chosen) == t:
            return True
        for root in range(low, g.n):
            if root in used:
                continue
            for s in by_root[root]:
                if s & used or not all(touch(s, c) for c in chosen):
                    continue
                if extend(chosen + [s], used | s, root + 1):
                    return True
        return False

    return extend([], frozenset(), 0)


def brute_force_hadwiger(g: Graph) -> int:
    """Largest t with a K_t minor."""
    t = 0
    while t < g.n and brute_force_has_clique_minor(g, t + 1):
        t += 1
    return t


def brute_force_contains_induced(host: Graph, pattern: Graph) -> bool:
    """Some k-subset of the host induces a graph isomorphic to the pattern."""
    target = to_nx(pattern)
    whole = to_nx(host)
    for subset in combinations(range(host.n), pattern.n):
        sub = whole.subgraph(subset)
        if sub.number_of_edges() == target.number_of_edges() and nx.is_isomorphic(sub, target):
            return True
    return False


def labelled_triangle_free(n: int) -> Iterator[Graph]:
    """Every labelled triangle-free graph on n vertices, built vertex by vertex."""

    def grow(rows: List[int]) -> Iterator[List[int]]:
        k = len(rows)
        if k == n:
            yield rows
            return
        for s in range(1 << k):
            members = [v for v in range(k) if s >> v & 1]
            if any(rows[u] >> v & 1 for u, v in combinations(members, 2)):
                continue
            new_rows = [row | ((s >> v & 1) << k) for v, row in enumerate(rows)]
            new_rows.append(s)
            yield from grow(new_rows)

    for rows in grow([]):
        yield Graph(n, tuple(rows))


def isomorphism_classes(graphs: Iterator[Graph]) -> List[nx.Graph]:
    """One networkx representative per isomorphism class."""
    buckets: dict = {}
    for g in graphs:
        h = to_nx(g)
        key = nx.weisfeiler_lehman_graph_hash(h)
        bucket = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(h, other) for other in bucket):
            bucket.append(h)
    return [h for bucket in buckets.values() for h in bucket]
