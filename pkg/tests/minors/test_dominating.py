"""
Tests for connected dominating matchings and the contraction lift.
"""

import pytest

from minorlab.core.errors import CertificateError, InvalidMatchingError
from minorlab.graphcore.graph import Graph, join
from minorlab.minors.certificate import verify_certificate
from minorlab.minors.dominating import (
    build_reduction,
    check_dominating_matching,
    find_connected_dominating_matching,
    is_connected_dominating_matching,
    lemma2_certificate,
    reduce_and_lift,
)
from minorlab.models.certificates import DominatingMatching, MinorCertificate


def test_dominating_edge_in_k4():
    """Test that a single edge suffices when one dominates."""
    m = find_connected_dominating_matching(Graph.complete(4))
    assert m is not None
    assert m.edges == [(0, 1)]


def test_c5_needs_two_edges(c5: Graph):
    """Test the lexicographically first size-2 matching on C5."""
    m = find_connected_dominating_matching(c5)
    assert m is not None
    assert m.edges == [(0, 1), (2, 3)]
    assert find_connected_dominating_matching(c5, max_size=1) is None


def test_edgeless_graph_has_none():
    """Test two isolated vertices."""
    assert find_connected_dominating_matching(Graph.empty(2)) is None


@pytest.mark.parametrize(
    "edges",
    [
        [(0, 2)],
        [(0, 1), (1, 2)],
        [(0, 1)],
    ],
)
def test_invalid_matchings(c5: Graph, edges):
    """
    Test non-edges, shared vertices and missed vertices.

    Args:
        c5 (Graph): Host.
        edges: Candidate matching.
    """
    m = DominatingMatching(edges=edges)
    with pytest.raises(InvalidMatchingError):
        check_dominating_matching(c5, m)
    assert not is_connected_dominating_matching(c5, m)


def test_unjoined_edges_rejected():
    """Test two edges with no edge between them."""
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(InvalidMatchingError):
        check_dominating_matching(g, DominatingMatching(edges=[(0, 1), (2, 3)]))


def test_build_reduction(c5: Graph):
    """Test that contracting [(0,1),(2,3)] in C5 gives K3."""
    red = build_reduction(c5, DominatingMatching(edges=[(0, 1), (2, 3)]))
    assert red.origins == ((0, 1), (2, 3), (4,))
    assert red.reduced == Graph.complete(3)


def test_reduce_and_lift(c5: Graph):
    """Test lifting a K1 model of the leftover vertex."""
    m = DominatingMatching(edges=[(0, 1), (2, 3)])
    lifted = reduce_and_lift(c5, m, MinorCertificate(sets=[[4]]))
    assert lifted.sets == [[4], [0, 1], [2, 3]]
    assert verify_certificate(c5, lifted) == 3


def test_lift_rejects_inner_on_matched_vertices(c5: Graph):
    """Test an inner model that reuses a matched vertex."""
    m = DominatingMatching(edges=[(0, 1), (2, 3)])
    with pytest.raises(CertificateError):
        reduce_and_lift(c5, m, MinorCertificate(sets=[[3, 4]]))


def test_lemma2_certificate_reaches_half(c5_join_c5: Graph):
    """Test that the lifted model has at least ceil(n/2) sets."""
    m = find_connected_dominating_matching(c5_join_c5)
    assert m is not None
    cert = lemma2_certificate(c5_join_c5, m)
    assert cert is not None
    assert verify_certificate(c5_join_c5, cert) >= 5


def test_lemma2_certificate_on_odd_order():
    """Test a 7-vertex host: two hubs over C5, the hub edge dominates."""
    g = join(Graph.complete(2), Graph.cycle(5))
    m = find_connected_dominating_matching(g)
    assert m is not None
    assert m.edges == [(0, 1)]
    cert = lemma2_certificate(g, m)
    assert cert is not None
    assert cert.size >= 4
