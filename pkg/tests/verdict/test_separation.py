"""
Tests for clique separations and the separator-claims audit.
"""

import pytest

from minorlab.core.constants import AuditStatus, ClaimName
from minorlab.core.errors import PreconditionError
from minorlab.graphcore.graph import Graph, disjoint_union
from minorlab.patterns.catalog import get_pattern
from minorlab.patterns.matcher import Embedding
from minorlab.verdict.audit import claims_audit
from minorlab.verdict.separation import find_clique_separation


def _k6_with_cut_vertex(neighbours_in_f1, f2_size=1):
    """K6 on 0..5 and a cut vertex 6 adjacent to the given F1 vertices and to the whole clique F2 from 7."""
    f2 = range(7, 7 + f2_size)
    edges = [(i, j) for i in range(6) for j in range(i + 1, 6)]
    edges += [(i, j) for i in f2 for j in f2 if i < j]
    edges += [(v, 6) for v in neighbours_in_f1] + [(6, v) for v in f2]
    return Graph.from_edges(7 + f2_size, edges)


def test_disconnected_host():
    """Test the empty cut on K6 plus K2."""
    sep = find_clique_separation(disjoint_union(Graph.complete(6), Graph.complete(2)))
    assert sep.t == []
    assert sep.f1 == [0, 1, 2, 3, 4, 5]
    assert sep.f2 == [6, 7]


def test_c5_cut(c5: Graph):
    """Test the lexicographically first minimum cut of C5."""
    sep = find_clique_separation(c5)
    assert sep.t == [0, 2]
    assert sep.f1 == [3, 4]
    assert sep.f2 == [1]


def test_c5_join_c5_cut(c5_join_c5: Graph):
    """Test that a join must be cut through one whole side."""
    # No clique cutset exists here; the minimum vertex cut is returned instead of None.
    sep = find_clique_separation(c5_join_c5)
    assert sep.t == [0, 1, 2, 3, 4, 5, 7]
    assert sep.f1 == [8, 9]
    assert sep.f2 == [6]


def test_complete_graph_has_no_cut(k7: Graph):
    """Test that cliques have no separation."""
    assert find_clique_separation(k7) is None


def test_min_large_component(c5: Graph):
    """Test skipping cuts whose larger side is too small."""
    assert find_clique_separation(c5, min_large_component=3) is None


def test_separation_precondition(petersen: Graph):
    """Test alpha > 2."""
    with pytest.raises(PreconditionError):
        find_clique_separation(petersen)


def test_audit_consistent(k6_plus_k1: Graph):
    """Test a host where every claim holds and no K5plus exists."""
    report = claims_audit(k6_plus_k1)
    assert report.status == AuditStatus.CONSISTENT
    assert report.separation.t == []
    assert all(c.holds for c in report.claims)
    assert report.k5plus_copy is None
    assert report.discrepancies == []


def test_audit_predicted_copy():
    """Test a cut vertex with one neighbour in F1: claim fails and a K5plus appears."""
    g = _k6_with_cut_vertex([0])
    report = claims_audit(g)
    assert report.separation.t == [6]
    assert report.status == AuditStatus.PREDICTED_COPY
    failed = [c for c in report.claims if not c.holds]
    assert [c.claim for c in failed] == [ClaimName.NEIGHBOURS_IN_F1]
    assert failed[0].witness == 6
    assert report.predicted_copy == [0, 1, 2, 3, 4, 6]
    assert report.predicted_by == ClaimName.NEIGHBOURS_IN_F1
    assert Embedding(tuple(report.k5plus_copy)).verify(g, get_pattern("K5plus"))


def test_audit_many_neighbours_in_f1():
    """Test a cut vertex with four neighbours in F1: the copy hangs its F2 neighbour on it."""
    g = _k6_with_cut_vertex([0, 1, 2, 3])
    report = claims_audit(g)
    assert report.separation.t == [6]
    assert report.separation.f2 == [7]
    assert report.status == AuditStatus.PREDICTED_COPY
    failed = [c for c in report.claims if not c.holds]
    assert [c.claim for c in failed] == [ClaimName.NEIGHBOURS_IN_F1]
    assert failed[0].construction == [6, 0, 1, 2, 3, 7]
    assert report.predicted_copy == [6, 0, 1, 2, 3, 7]
    assert report.predicted_by == ClaimName.NEIGHBOURS_IN_F1
    assert Embedding(tuple(report.predicted_copy)).verify(g, get_pattern("K5plus"))
    assert report.k5plus_copy is not None
    assert report.discrepancies == []


def test_audit_large_f2():
    """Test |F2| = 4: the copy is the cut vertex, F2 and one F1 neighbour."""
    g = _k6_with_cut_vertex([0, 1, 2], f2_size=4)
    report = claims_audit(g)
    assert report.separation.t == [6]
    assert report.separation.f2 == [7, 8, 9, 10]
    assert report.status == AuditStatus.PREDICTED_COPY
    failed = [c for c in report.claims if not c.holds]
    assert [c.claim for c in failed] == [ClaimName.F2_SIZE]
    assert report.claims[0].construction is None
    assert report.predicted_copy == [6, 7, 8, 9, 10, 0]
    assert report.predicted_by == ClaimName.F2_SIZE
    assert Embedding(tuple(report.predicted_copy)).verify(g, get_pattern("K5plus"))
    assert report.k5plus_copy is not None
    assert report.discrepancies == []


def test_audit_discrepancy():
    """Test a cut vertex with two neighbours in F1: claims hold yet a K5plus exists."""
    report = claims_audit(_k6_with_cut_vertex([0, 1]))
    assert report.status == AuditStatus.DISCREPANCY
    assert all(c.holds for c in report.claims)
    assert report.claims[0].construction == [0, 2, 3, 4, 5, 6]
    assert report.predicted_copy is None
    assert report.predicted_by is None
    assert report.k5plus_copy is not None
    assert len(report.discrepancies) == 2


@pytest.mark.parametrize(
    "neighbours, f2_size",
    [([0], 1), ([0, 1], 1), ([0, 1, 2, 3], 1), ([0, 1, 2, 3, 4], 2), ([0, 1, 2], 4), ([0], 5)],
)
def test_audit_constructions_agree_with_matcher(neighbours, f2_size):
    """
    Test that every construction verifies and the matcher then finds a copy too.

    Args:
        neighbours: F1 neighbours of the cut vertex.
        f2_size: Order of the clique F2.
    """
    g = _k6_with_cut_vertex(neighbours, f2_size=f2_size)
    report = claims_audit(g)
    built = [c.construction for c in report.claims if c.construction is not None]
    assert built
    for images in built:
        assert Embedding(tuple(images)).verify(g, get_pattern("K5plus"))
    assert report.k5plus_copy is not None
    assert not any("is not an induced" in d for d in report.discrepancies)


def test_audit_preconditions(c5: Graph, petersen: Graph):
    """Test alpha > 2 and hosts without a large enough separation."""
    with pytest.raises(PreconditionError):
        claims_audit(petersen)
    with pytest.raises(PreconditionError):
        claims_audit(c5)


def test_audit_reports_failed_construction(mocker):
    """Test that a construction which does not verify becomes a discrepancy."""
    mocker.patch.object(Embedding, "verify", return_value=False)
    report = claims_audit(_k6_with_cut_vertex([0, 1, 2, 3]))
    assert report.status == AuditStatus.DISCREPANCY
    assert report.predicted_copy is None
    assert report.discrepancies == [
        "claim1_neighbours_in_f1 construction at [6, 0, 1, 2, 3, 7] is not an induced K5plus"
    ]
