"""
Graph representation, graph6 codec, canonical labels and generation.
"""

from .canonical import CanonicalForm, canonical_graph, canonical_label
from .generate import generate_alpha2, generate_triangle_free
from .graph import (
    Graph,
    VertexSet,
    complement,
    contract_edge,
    disjoint_union,
    has_triangle,
    induced_subgraph,
    join,
    permute,
    quotient,
)
from .graph6 import graph6_decode, graph6_encode, iter_graph6_lines, read_graph6_file

__all__ = [
    "CanonicalForm",
    "Graph",
    "VertexSet",
    "canonical_graph",
    "canonical_label",
    "complement",
    "contract_edge",
    "disjoint_union",
    "generate_alpha2",
    "generate_triangle_free",
    "graph6_decode",
    "graph6_encode",
    "has_triangle",
    "induced_subgraph",
    "iter_graph6_lines",
    "join",
    "permute",
    "quotient",
    "read_graph6_file",
]
