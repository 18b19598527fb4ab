"""
Immutable bit-matrix graphs and vertex sets.

Row `adj[v]` holds the neighbourhood of `v` as a bit mask, so neighbourhood
intersections and unions are single integer operations.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from minorlab.core.constants import MAX_ORDER
from minorlab.core.errors import GraphSizeError, PreconditionError
from minorlab.utils.bits import full_mask, iter_bits, lowest, mask_of, members, popcount

Edge = Tuple[int, int]


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphSizeError("Graph", self.n, MAX_ORDER)
        if len(self.adj) != self.n:
            raise PreconditionError(
                f"expected {self.n} adjacency rows, got {len(self.adj)}",
                {"n": self.n, "rows": len(self.adj)},
            )
        limit = full_mask(self.n)
        for v, row in enumerate(self.adj):
            if row & ~limit or (row >> v) & 1:
                raise PreconditionError(f"row {v} has a loop or out-of-range bit", {"vertex": v})
            for w in iter_bits(row):
                if not (self.adj[w] >> v) & 1:
                    raise PreconditionError(
                        f"adjacency not symmetric at ({v}, {w})", {"pair": [v, w]}
                    )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        """
        Build a graph from an edge list.

        Args:
            n (int): Number of vertices.
            edges (Iterable[Edge]): Vertex pairs.

        Returns:
            Graph: The graph.
        """
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"loop at vertex {u}", {"vertex": u})
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u}, {v}) out of range for n={n}", {"edge": [u, v]})
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        """Edgeless graph on n vertices."""
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        """Complete graph K_n."""
        everything = full_mask(n)
        return cls(n, tuple(everything & ~(1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        """Cycle C_n (n >= 3)."""
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        """Path on n vertices."""
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def vertex_mask(self) -> int:
        """Mask of all vertices."""
        return full_mask(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        """Whether uv is an edge."""
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> List[Edge]:
        """Edges (u, v) with u < v in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        """e(G)."""
        return sum(popcount(row) for row in self.adj) // 2

    def degree(self, v: int) -> int:
        """d_G(v)."""
        return popcount(self.adj[v])

    def degrees(self) -> List[int]:
        """Degree of every vertex."""
        return [popcount(row) for row in self.adj]

    def min_degree(self) -> int:
        """delta(G); 0 for the empty graph."""
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        """Delta(G); 0 for the empty graph."""
        return max(self.degrees(), default=0)

    def neighbourhood(self, mask: int) -> int:
        """
        N_G(X): vertices outside X adjacent to some vertex of X.

        Args:
            mask (int): The set X.

        Returns:
            int: Mask of N_G(X).
        """
        out = 0
        for v in iter_bits(mask):
            out |= self.adj[v]
        return out & ~mask

    def edges_between(self, a: int, b: int) -> int:
        """e(G[A], G[B]) for disjoint A, B: number of edges with one end in each."""
        return sum(popcount(self.adj[v] & b) for v in iter_bits(a))

    def is_clique(self, mask: int) -> bool:
        """Whether the vertices of `mask` are pairwise adjacent."""
        for v in iter_bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def is_independent(self, mask: int) -> bool:
        """Whether the vertices of `mask` are pairwise nonadjacent."""
        return all(not (self.adj[v] & mask) for v in iter_bits(mask))

    def reach(self, start: int, within: int) -> int:
        """Vertices of `within` reachable from `start` inside G[within]."""
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    def is_connected(self, mask: Optional[int] = None) -> bool:
        """
        Whether G[mask] is connected; the empty set counts as disconnected.

        Args:
            mask (Optional[int]): Vertex subset, all vertices by default.

        Returns:
            bool: Connectivity of the induced subgraph.
        """
        if mask is None:
            mask = self.vertex_mask
        if not mask:
            return False
        return self.reach(lowest(mask), mask) == mask

    def components(self, mask: Optional[int] = None) -> List[int]:
        """
        Connected components of G[mask], ordered by lowest vertex.

        Args:
            mask (Optional[int]): Vertex subset, all vertices by default.

        Returns:
            List[int]: Component masks.
        """
        if mask is None:
            mask = self.vertex_mask
        out = []
        rest = mask
        while rest:
            comp = self.reach(lowest(rest), rest)
            out.append(comp)
            rest &= ~comp
        return out


@dataclass(frozen=True, slots=True)
class VertexSet:
    """A subset of the vertices of a host graph of order n."""

    mask: int
    n: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.n:
            raise PreconditionError(
                f"vertex set has bits beyond n={self.n}", {"mask": self.mask, "n": self.n}
            )

    @classmethod
    def of(cls, vertices: Iterable[int], n: int) -> "VertexSet":
        """Vertex set from ids."""
        return cls(mask_of(vertices), n)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool((self.mask >> v) & 1)

    def to_list(self) -> List[int]:
        """Ascending vertex ids."""
        return members(self.mask)


def complement(g: Graph) -> Graph:
    """
    Complement graph: xy is an edge iff it is not an edge of g (x != y).

    Args:
        g (Graph): Input graph.

    Returns:
        Graph: The complement.
    """
    everything = g.vertex_mask
    return Graph(g.n, tuple(everything & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, s: int | VertexSet) -> Graph:
    """
    G[S] relabelled to 0..|S|-1 in ascending order of original ids.

    Args:
        g (Graph): Host graph.
        s (int | VertexSet): Vertex subset.

    Returns:
        Graph: The induced subgraph.
    """
    mask = s.mask if isinstance(s, VertexSet) else s
    if mask >> g.n:
        raise PreconditionError("vertex subset exceeds host order", {"n": g.n})
    keep = members(mask)
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        rows.append(mask_of(index[w] for w in iter_bits(g.adj[v] & mask)))
    return Graph(len(keep), tuple(rows))


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """
    Contract edge uv; the merged vertex keeps id min(u, v) and higher ids shift down.

    Args:
        g (Graph): Host graph.
        u (int): One endpoint.
        v (int): Other endpoint.

    Returns:
        Graph: Simple graph on n-1 vertices.

    Raises:
        PreconditionError: If uv is not an edge.
    """
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise PreconditionError(f"({u}, {v}) is not an edge", {"edge": [u, v]})
    keep, drop = min(u, v), max(u, v)
    merged = (g.adj[keep] | g.adj[drop]) & ~(1 << keep) & ~(1 << drop)

    def squeeze(mask: int) -> int:
        low = mask & ((1 << drop) - 1)
        high = mask >> (drop + 1)
        return low | (high << drop)

    rows = []
    for w in range(g.n):
        if w == drop:
            continue
        if w == keep:
            row = merged
        else:
            row = g.adj[w]
            if row & (1 << drop):
                row = (row & ~(1 << drop)) | (1 << keep)
        rows.append(squeeze(row))
    return Graph(g.n - 1, tuple(rows))


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """
    Relabel vertices: vertex v of g becomes perm[v].

    Args:
        g (Graph): Input graph.
        perm (Sequence[int]): A permutation of 0..n-1.

    Returns:
        Graph: Isomorphic copy.
    """
    if sorted(perm) != list(range(g.n)):
        raise PreconditionError("not a permutation of the vertex set", {"perm": list(perm)})
    rows = [0] * g.n
    for v in range(g.n):
        rows[perm[v]] = mask_of(perm[w] for w in iter_bits(g.adj[v]))
    return Graph(g.n, tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G + H with H's vertices shifted by |G|."""
    shift = g.n
    return Graph(g.n + h.n, tuple(g.adj) + tuple(row << shift for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    """G v H: disjoint union plus every edge between the two parts."""
    shift = g.n
    h_mask = full_mask(h.n) << shift
    rows = [row | h_mask for row in g.adj]
    rows.extend((row << shift) | full_mask(g.n) for row in h.adj)
    return Graph(g.n + h.n, tuple(rows))


def has_triangle(g: Graph) -> bool:
    """Whether g contains K_3 as a subgraph."""
    for u in range(g.n):
        higher = g.adj[u] >> (u + 1) << (u + 1)
        for v in iter_bits(higher):
            if g.adj[u] & g.adj[v]:
                return True
    return False


def all_pairs(n: int) -> List[Edge]:
    """All vertex pairs (u, v), u < v, in lexicographic order."""
    return list(combinations(range(n), 2))


def quotient(g: Graph, parts: Sequence[int]) -> Graph:
    """
    Contract each part to one vertex; part i becomes vertex i.

    Args:
        g (Graph): Host graph.
        parts (Sequence[int]): Pairwise disjoint vertex masks, each connected in g.

    Returns:
        Graph: Parts adjacent iff some host edge joins them.
    """
    reach = [g.neighbourhood(part) for part in parts]
    rows = []
    for i in range(len(parts)):
        rows.append(mask_of(j for j, part in enumerate(parts) if j != i and reach[i] & part))
    return Graph(len(parts), tuple(rows))
