"""
Tests for the verdict procedure and the executable HC results.
"""

import pytest

from minorlab.core.constants import FilterResult, SearchMode, SearchStatus, VerdictOutcome
from minorlab.core.errors import PreconditionError, SearchCapError
from minorlab.graphcore.graph import Graph
from minorlab.minors.certificate import verify_certificate
from minorlab.models.search import MinorSearchResult
from minorlab.verdict import theorems
from minorlab.verdict.theorems import (
    DELTA22_REASON,
    hc2iff_check,
    hc_verdict,
    k8_degree_filter,
    k8_degree_profile_filter,
    lemma1_admissible,
    min_degree_cap,
    proven_h_filter,
    seagull_condition,
    theorem1_pigeonhole,
)


@pytest.mark.parametrize(
    "fixture,chi",
    [("c5", 3), ("k7", 7), ("c5_join_c5", 6), ("petersen", 3), ("p4", 2)],
)
def test_hc_verdict_holds(fixture: str, chi: int, request):
    """
    Test verdicts with verified certificates on small graphs.

    Args:
        fixture (str): Fixture name.
        chi (int): Chromatic number.
        request: Pytest fixture request.
    """
    g = request.getfixturevalue(fixture)
    verdict = hc_verdict(g)
    assert verdict.outcome == VerdictOutcome.HOLDS
    assert verdict.chi == chi
    assert verify_certificate(g, verdict.certificate) >= chi
    assert verdict.coloring.is_valid(g)
    assert verdict.mode == SearchMode.EXACT


def test_hc_verdict_heuristic_above_cap(c5_join_c5: Graph):
    """Test that orders above the cap use the heuristic."""
    verdict = hc_verdict(c5_join_c5, exact_cap=8)
    assert verdict.mode == SearchMode.HEURISTIC
    assert verdict.outcome == VerdictOutcome.HOLDS


def test_hc_verdict_counterexample_from_exhaustion(c5: Graph, mocker):
    """Test that only an exhausted exact search yields a counterexample."""
    mocker.patch.object(
        theorems,
        "hadwiger_at_least",
        return_value=MinorSearchResult(status=SearchStatus.EXHAUSTED, target=3, mode=SearchMode.EXACT),
    )
    verdict = hc_verdict(c5)
    assert verdict.outcome == VerdictOutcome.COUNTEREXAMPLE
    assert verdict.exhausted_t == 3


def test_hc_verdict_unknown(c5: Graph, mocker):
    """Test budget exhaustion and the colouring limit."""
    mocker.patch.object(
        theorems,
        "hadwiger_at_least",
        return_value=MinorSearchResult(
            status=SearchStatus.UNKNOWN, target=3, mode=SearchMode.EXACT, reason="node budget 1 exhausted"
        ),
    )
    assert hc_verdict(c5).outcome == VerdictOutcome.UNKNOWN
    far = hc_verdict(Graph.empty(21))
    assert far.outcome == VerdictOutcome.UNKNOWN
    assert "colouring" in far.reason


def test_hc2iff_check(c5: Graph, c5_join_c5: Graph, petersen: Graph):
    """Test the equivalence on alpha <= 2 graphs and its preconditions."""
    assert hc2iff_check(c5)
    assert hc2iff_check(c5_join_c5)
    with pytest.raises(PreconditionError):
        hc2iff_check(petersen)
    with pytest.raises(SearchCapError):
        hc2iff_check(c5_join_c5, exact_cap=9)


def test_seagull_condition(c5: Graph, c5_join_c5: Graph):
    """Test both parity branches."""
    assert seagull_condition(c5)
    assert seagull_condition(c5_join_c5)
    assert not seagull_condition(Graph.empty(9))
    assert not seagull_condition(Graph.empty(6))
    assert seagull_condition(Graph.empty(4))


@pytest.mark.parametrize("n,expected", [(26, False), (27, True), (28, False), (29, True), (40, True)])
def test_lemma1_admissible(n: int, expected: bool):
    """
    Test the admissible orders.

    Args:
        n (int): Order.
        expected (bool): Admissibility.
    """
    assert lemma1_admissible(n) is expected


def test_min_degree_cap(k7: Graph):
    """Test viability under delta <= n-7."""
    assert not min_degree_cap(k7)
    assert min_degree_cap(Graph.empty(8))
    assert not min_degree_cap(Graph.empty(6))


@pytest.mark.parametrize(
    "n,delta,big_delta,passed,fragment",
    [
        (26, 19, 20, False, "|G|=26"),
        (27, 19, 23, False, "Δ=23 > 22"),
        (27, 18, 20, False, "δ=18 < 19"),
        (27, 19, 22, False, DELTA22_REASON),
        (27, 21, 22, False, DELTA22_REASON),
        (27, 19, 19, False, "parity"),
        (27, 21, 21, False, "parity"),
        (27, 19, 20, True, "open case"),
        (27, 19, 21, True, "open case"),
        (27, 20, 21, False, "Δ=21"),
        (27, 20, 20, False, "Δ=20"),
    ],
)
def test_k8_degree_profile(n: int, delta: int, big_delta: int, passed: bool, fragment: str):
    """
    Test each branch of the degree-profile filter.

    Args:
        n (int): Order.
        delta (int): Minimum degree.
        big_delta (int): Maximum degree.
        passed (bool): Expected survival.
        fragment (str): Expected part of the reason.
    """
    outcome = k8_degree_profile_filter(n, delta, big_delta)
    assert outcome.passed is passed
    assert fragment in outcome.reason


def test_k8_profile_rejects_inverted_degrees():
    """Test delta > Delta."""
    with pytest.raises(PreconditionError):
        k8_degree_profile_filter(27, 21, 20)


def test_k8_degree_filter_on_graph(c5: Graph):
    """Test the graph form on a small graph."""
    assert k8_degree_filter(c5).result == FilterResult.REJECT


def test_proven_h_filter(c5: Graph, k6_plus_k1: Graph, k7: Graph):
    """Test rejection reasons and a passing graph."""
    outcome = proven_h_filter(c5)
    assert not outcome.passed
    assert outcome.reason == "K1_6bar, H7, K5plus, W5-free"
    assert proven_h_filter(k6_plus_k1).reason == "H7, K5plus, W5-free"
    assert proven_h_filter(k7, ["K7"]).passed


def test_pigeonhole_dominating_edge(k7: Graph):
    """Test a host where a neighbour of v sees all of A."""
    witness = theorem1_pigeonhole(k7)
    assert witness.v == 0
    assert witness.dominating_edge == (0, 1)


def test_pigeonhole_counting(c5: Graph):
    """Test the pigeonhole branch on C5."""
    witness = theorem1_pigeonhole(c5)
    assert witness.dominating_edge is None
    assert witness.outside == [2, 3]
    assert witness.non_edges == 2
    assert witness.w == 2
    assert witness.missed == [4]
    assert witness.required == 1


def test_pigeonhole_needs_high_degree():
    """Test that no vertex of degree >= n-6 gives None."""
    assert theorem1_pigeonhole(Graph.cycle(10)) is None
