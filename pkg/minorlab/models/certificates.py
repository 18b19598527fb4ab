"""
Certificate models: matchings, colourings, clique-minor branch sets.
"""

from typing import List, Tuple

from pydantic import BaseModel, Field

from minorlab.graphcore.graph import Graph
from minorlab.utils.bits import mask_of, members


class MatchingCert(BaseModel):
    """A matching: pairwise disjoint host edges."""

    edges: List[Tuple[int, int]] = Field(default_factory=list, description="Matched pairs (u < v)")

    @property
    def size(self) -> int:
        """Number of matched pairs."""
        return len(self.edges)

    def is_valid(self, g: Graph) -> bool:
        """
        Check disjointness and that every pair is an edge of g.

        Args:
            g (Graph): Host graph.

        Returns:
            bool: Whether the matching is valid.
        """
        seen = 0
        for u, v in self.edges:
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                return False
            pair = (1 << u) | (1 << v)
            if seen & pair:
                return False
            seen |= pair
        return True


class ColoringCert(BaseModel):
    """A proper colouring with colours 0..k-1, all used."""

    colors: List[int] = Field(default_factory=list, description="Colour of each vertex")
    k: int = Field(0, ge=0, description="Number of colours")

    def is_valid(self, g: Graph) -> bool:
        """
        Check the colouring is proper on g and uses exactly colours 0..k-1.

        Args:
            g (Graph): Host graph.

        Returns:
            bool: Whether the colouring is valid.
        """
        if len(self.colors) != g.n:
            return False
        if set(self.colors) != set(range(self.k)):
            return False
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())


class MinorCertificate(BaseModel):
    """Disjoint connected branch sets, pairwise joined by an edge: a K_t minor model."""

    sets: List[List[int]] = Field(default_factory=list, description="Branch sets as vertex ids")

    @property
    def size(self) -> int:
        """t, the order of the clique minor."""
        return len(self.sets)

    def masks(self) -> List[int]:
        """Branch sets as bit masks."""
        return [mask_of(s) for s in self.sets]

    @classmethod
    def from_masks(cls, masks: List[int]) -> "MinorCertificate":
        """Build from bit masks, members listed ascending."""
        return cls(sets=[members(m) for m in masks])


class DominatingMatching(BaseModel):
    """A connected dominating matching."""

    edges: List[Tuple[int, int]] = Field(default_factory=list, description="Matched pairs (u < v)")

    @property
    def size(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def vertex_mask(self) -> int:
        """V(M) as a bit mask."""
        return mask_of(v for edge in self.edges for v in edge)
