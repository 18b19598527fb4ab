"""
Independent checker for clique-minor models.
"""

from minorlab.core.errors import (
    CertificateError,
    DisconnectedBranchSetError,
    MissingCrossEdgeError,
    OverlappingBranchSetsError,
)
from minorlab.graphcore.graph import Graph
from minorlab.models.certificates import MinorCertificate
from minorlab.utils.bits import members


def verify_certificate(g: Graph, c: MinorCertificate) -> int:
    """
    Check a K_t model against its host and return t.

    Overlaps are reported before connectivity, connectivity before cross edges,
    each for the lowest offending index.

    Args:
        g (Graph): Host graph.
        c (MinorCertificate): Branch sets.

    Returns:
        int: Number of branch sets.

    Raises:
        CertificateError: For a vertex outside the host.
        OverlappingBranchSetsError: If two sets share a vertex.
        DisconnectedBranchSetError: If a set is empty or induces a disconnected subgraph.
        MissingCrossEdgeError: If two sets have no edge between them.
    """
    for i, s in enumerate(c.sets):
        bad = [v for v in s if not 0 <= v < g.n]
        if bad:
            raise CertificateError(
                f"branch set {i} has vertices outside the host", {"set": i, "vertices": bad}
            )

    masks = c.masks()
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            shared = masks[i] & masks[j]
            if shared:
                raise OverlappingBranchSetsError(i, j, members(shared))

    for i, mask in enumerate(masks):
        if not g.is_connected(mask):
            raise DisconnectedBranchSetError(i, members(mask))

    reach = [g.neighbourhood(mask) for mask in masks]
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if not reach[i] & masks[j]:
                raise MissingCrossEdgeError(i, j)

    return len(masks)


def is_valid_certificate(g: Graph, c: MinorCertificate) -> bool:
    """verify_certificate as a predicate."""
    try:
        verify_certificate(g, c)
    except CertificateError:
        return False
    return True
