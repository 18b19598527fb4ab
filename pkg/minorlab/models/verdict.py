"""
Per-graph verdict and filter schemas.
"""

from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from minorlab.core.constants import (
    DEFAULT_DOMINATING_MATCHING_SIZE,
    DEFAULT_FILTER_ORDER,
    DEFAULT_PROVEN_PATTERNS,
    K8_CANDIDATE_ORDER,
    OMEGA_THRESHOLD,
    FilterName,
    FilterResult,
    SearchMode,
    VerdictOutcome,
)
from minorlab.core.errors import ConfigurationError
from minorlab.patterns.catalog import pattern_names

from .certificates import ColoringCert, MinorCertificate


class Verdict(BaseModel):
    """HC verdict for one graph: h(G) >= chi(G) witnessed, refuted by exhaustion, or undecided."""

    outcome: VerdictOutcome
    chi: Optional[int] = Field(None, description="Chromatic number, when computed")
    certificate: Optional[MinorCertificate] = Field(None, description="K_chi model when the verdict holds")
    coloring: Optional[ColoringCert] = Field(None, description="Optimal colouring")
    mode: Optional[SearchMode] = None
    exhausted_t: Optional[int] = Field(None, description="Order whose minor search was exhausted")
    reason: Optional[str] = None

    @model_validator(mode="after")
    def check_outcome(self) -> "Verdict":
        """
        Holds needs both certificates with h >= chi; a counterexample needs an exhausted exact search.

        Returns:
            Verdict: The validated verdict.
        """
        if self.outcome == VerdictOutcome.HOLDS:
            if self.certificate is None or self.coloring is None:
                raise ValueError("holds requires a minor certificate and a colouring")
            if self.certificate.size < self.coloring.k:
                raise ValueError("certificate smaller than the colouring")
        if self.outcome == VerdictOutcome.COUNTEREXAMPLE:
            if self.mode != SearchMode.EXACT or self.exhausted_t is None:
                raise ValueError("counterexamples come only from exhausted exact searches")
        return self

    @property
    def h(self) -> Optional[int]:
        """Order of the certified clique minor."""
        return self.certificate.size if self.certificate is not None else None


class FilterOutcome(BaseModel):
    """One step of a filter trace."""

    name: FilterName
    result: FilterResult
    reason: str = ""

    @property
    def passed(self) -> bool:
        """Whether the graph survives this filter."""
        return self.result == FilterResult.PASS


class FilterConfig(BaseModel):
    """Which pruning filters run, in which order, with which parameters."""

    filters: List[FilterName] = Field(default_factory=lambda: list(DEFAULT_FILTER_ORDER))
    patterns: List[str] = Field(default_factory=lambda: list(DEFAULT_PROVEN_PATTERNS))
    omega_threshold: int = Field(OMEGA_THRESHOLD, ge=1, description="Graphs with smaller omega are rejected")
    dominating_max_size: int = Field(DEFAULT_DOMINATING_MATCHING_SIZE, ge=1, le=6)
    k8_order: int = Field(K8_CANDIDATE_ORDER, ge=1, description="Order of K8-free candidates")

    @field_validator("patterns")
    @classmethod
    def validate_patterns(cls, v: List[str]) -> List[str]:
        """
        Only catalog pattern names are accepted.

        Args:
            v (List[str]): Pattern names.

        Returns:
            List[str]: The names, unchanged.

        Raises:
            ValueError: For unknown names.
        """
        known = pattern_names()
        unknown = [name for name in v if name not in known]
        if unknown:
            raise ValueError(f"unknown patterns {unknown}; known: {known}")
        return v

    @classmethod
    def from_names(cls, names: str, **kwargs) -> "FilterConfig":
        """
        Build from a comma-separated filter list such as "alpha2,omega7".

        Args:
            names (str): Filter names.
            **kwargs: Other FilterConfig fields.

        Returns:
            FilterConfig: The configuration.

        Raises:
            ConfigurationError: If a name is not a defined filter.
        """
        chosen = []
        for raw in names.split(","):
            name = raw.strip()
            if not name:
                continue
            try:
                chosen.append(FilterName(name))
            except ValueError:
                raise ConfigurationError(
                    f"unknown filter '{name}'",
                    {"filter": name, "known": [f.value for f in FilterName]},
                ) from None
        return cls(filters=chosen, **kwargs)
