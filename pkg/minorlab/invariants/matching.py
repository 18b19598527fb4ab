"""
Maximum-cardinality matching in general graphs (Edmonds' blossom algorithm).
"""

from collections import deque
from typing import List, Optional, Tuple

from minorlab.graphcore.graph import Graph
from minorlab.models.certificates import MatchingCert
from minorlab.utils.bits import iter_bits


def max_matching(g: Graph) -> MatchingCert:
    """
    A maximum-cardinality matching of g.

    Starts from a greedy matching and augments from every free vertex,
    shrinking odd cycles (blossoms) by relabelling their base.

    Args:
        g (Graph): Input graph.

    Returns:
        MatchingCert: Matched pairs (u < v), sorted.
    """
    n = g.n
    neighbours = [list(iter_bits(row)) for row in g.adj]
    match: List[int] = [-1] * n

    for u in range(n):
        if match[u] == -1:
            for v in neighbours[u]:
                if match[v] == -1:
                    match[u], match[v] = v, u
                    break

    def find_augmenting_path(root: int) -> Optional[Tuple[int, List[int]]]:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            on_path = [False] * n
            while True:
                a = base[a]
                on_path[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if on_path[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: List[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in neighbours[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    current_base = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, current_base, to, blossom)
                    mark_path(to, current_base, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = current_base
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return None

    for root in range(n):
        if match[root] != -1:
            continue
        found = find_augmenting_path(root)
        if found is None:
            continue
        v, parent = found
        # flip matched and unmatched edges along the path back to the root
        while v != -1:
            pv = parent[v]
            ppv = match[pv]
            match[v], match[pv] = pv, v
            v = ppv

    return MatchingCert(edges=sorted((u, w) for u, w in enumerate(match) if u < w))
