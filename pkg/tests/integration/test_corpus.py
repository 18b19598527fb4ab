"""
End-to-end checks over the alpha <= 2 corpus built from triangle-free classes.
"""

import pytest

from minorlab.core.constants import SearchStatus, VerdictOutcome, VerdictScope
from minorlab.graphcore.generate import generate_alpha2
from minorlab.graphcore.graph import Graph
from minorlab.graphcore.graph6 import graph6_encode
from minorlab.invariants.coloring import chromatic_alpha2, chromatic_number_exact
from minorlab.minors.certificate import verify_certificate
from minorlab.minors.dominating import find_connected_dominating_matching, lemma2_certificate
from minorlab.minors.search import hadwiger_at_least
from minorlab.models.verdict import FilterConfig
from minorlab.verdict.audit import claims_audit
from minorlab.verdict.pipeline import search_corpus
from minorlab.verdict.theorems import hc2iff_check, hc_verdict, seagull_condition

from ..oracles import brute_force_hadwiger

FAST_ORDERS = range(1, 7)
SLOW_ORDERS = [pytest.param(n, marks=pytest.mark.slow) for n in range(7, 11)]


@pytest.mark.parametrize("n", [*FAST_ORDERS, *SLOW_ORDERS])
def test_corpus_verdicts(n: int):
    """
    Test holds, the half-order equivalence, the colouring identity and the seagull implication.

    Args:
        n (int): Order.
    """
    for g in generate_alpha2(n):
        verdict = hc_verdict(g)
        assert verdict.outcome == VerdictOutcome.HOLDS, graph6_encode(g)
        assert verify_certificate(g, verdict.certificate) >= verdict.chi
        assert verdict.coloring.is_valid(g)
        assert hc2iff_check(g)
        if seagull_condition(g):
            assert verdict.outcome == VerdictOutcome.HOLDS
        assert chromatic_alpha2(g).k == chromatic_number_exact(g).k


@pytest.mark.parametrize("n", [*FAST_ORDERS, *SLOW_ORDERS])
def test_corpus_matching_lift(n: int):
    """
    Test that every successful lift verifies and reaches half the order.

    Args:
        n (int): Order.
    """
    for g in generate_alpha2(n):
        m = find_connected_dominating_matching(g, 3)
        if m is None:
            continue
        cert = lemma2_certificate(g, m)
        if cert is not None:
            assert verify_certificate(g, cert) >= (n + 1) // 2, graph6_encode(g)


@pytest.mark.parametrize(
    "n", [*FAST_ORDERS, pytest.param(7, marks=pytest.mark.slow), pytest.param(8, marks=pytest.mark.slow)]
)
def test_corpus_exact_search_matches_oracle(n: int):
    """
    Test exact minor search against the brute-force oracle on the corpus.

    Args:
        n (int): Order.
    """
    for g in generate_alpha2(n):
        h = brute_force_hadwiger(g)
        for t in range(n + 1):
            result = hadwiger_at_least(g, t)
            assert result.status == (SearchStatus.FOUND if t <= h else SearchStatus.EXHAUSTED)


def test_corpus_search_has_no_counterexample():
    """Test the full pipeline over the n <= 6 corpus with verdicts for every graph."""
    lines = [graph6_encode(g) for n in FAST_ORDERS for g in generate_alpha2(n)]
    report = search_corpus(lines, FilterConfig(), verdict_scope=VerdictScope.ALL)
    assert report.errors == 0
    assert report.survivors == []
    assert report.verdicts == {"holds": len(lines)}
    assert not report.has_counterexample


def test_audit_is_byte_stable():
    """Test identical JSON on repeated audits of the crafted hosts."""
    for neighbours in ([0], [0, 1]):
        edges = [(i, j) for i in range(6) for j in range(i + 1, 6)]
        edges += [(v, 6) for v in neighbours] + [(6, 7)]
        g = Graph.from_edges(8, edges)
        assert claims_audit(g).model_dump_json() == claims_audit(g).model_dump_json()
