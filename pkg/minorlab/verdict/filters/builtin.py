"""
Built-in pruning filters, cheapest first.
"""

from minorlab.core.constants import FilterName, FilterResult
from minorlab.graphcore.graph import Graph
from minorlab.invariants.cliques import alpha_at_most_2, clique_number
from minorlab.minors.dominating import find_connected_dominating_matching
from minorlab.models.verdict import FilterOutcome

from ..theorems import (
    k8_degree_filter,
    lemma1_admissible,
    min_degree_cap,
    proven_h_filter,
    seagull_condition,
)
from .base import BaseFilter


class Alpha2Filter(BaseFilter):
    """Keeps graphs with independence number at most two."""

    name = FilterName.ALPHA2

    def apply(self, g: Graph) -> FilterOutcome:
        if alpha_at_most_2(g):
            return self._pass()
        return self._reject("α ≥ 3")


class Lemma1Filter(BaseFilter):
    """Keeps orders 27 and >= 29."""

    name = FilterName.LEMMA1

    def apply(self, g: Graph) -> FilterOutcome:
        if lemma1_admissible(g.n):
            return self._pass()
        return self._reject(f"|G|={g.n} is neither 27 nor ≥ 29")


class MinDegreeFilter(BaseFilter):
    """Keeps graphs with delta <= n-7."""

    name = FilterName.MIN_DEGREE

    def apply(self, g: Graph) -> FilterOutcome:
        if min_degree_cap(g):
            return self._pass()
        return self._reject(f"δ={g.min_degree()} ≥ |G|-6")


class OmegaFilter(BaseFilter):
    """Keeps graphs containing a clique of the configured size (K7 by default)."""

    name = FilterName.OMEGA7

    def apply(self, g: Graph) -> FilterOutcome:
        omega = clique_number(g)
        if omega >= self.config.omega_threshold:
            return self._pass()
        return self._reject(f"ω={omega} < {self.config.omega_threshold}")


class SeagullFilter(BaseFilter):
    """Rejects graphs whose clique number already meets the packing hypothesis."""

    name = FilterName.SEAGULL

    def apply(self, g: Graph) -> FilterOutcome:
        if seagull_condition(g):
            bound = "|G|/4" if g.n % 2 == 0 else "(|G|+3)/4"
            return self._reject(f"ω ≥ {bound}")
        return self._pass()


class K8Filter(BaseFilter):
    """Degree-profile test for K8-free graphs; graphs with a K8 pass untouched."""

    name = FilterName.K8

    def apply(self, g: Graph) -> FilterOutcome:
        if clique_number(g) >= 8:
            return self._pass("contains K₈")
        if g.n != self.config.k8_order:
            return self._reject(f"K₈-free with |G|={g.n} ≠ {self.config.k8_order}")
        return k8_degree_filter(g)


class PatternFilter(BaseFilter):
    """Rejects graphs avoiding a proven pattern."""

    name = FilterName.PATTERNS

    def apply(self, g: Graph) -> FilterOutcome:
        return proven_h_filter(g, self.config.patterns)


class DominatingMatchingFilter(BaseFilter):
    """Rejects graphs with a small connected dominating matching; minimal counterexamples have none."""

    name = FilterName.DOMINATING_MATCHING

    def apply(self, g: Graph) -> FilterOutcome:
        m = find_connected_dominating_matching(g, self.config.dominating_max_size)
        if m is None:
            return self._pass()
        return FilterOutcome(
            name=self.name,
            result=FilterResult.REJECT,
            reason=f"connected dominating matching {[list(e) for e in m.edges]}",
        )
