"""
Corpus search records and aggregate report.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from minorlab.core.constants import (
    DEFAULT_EXACT_CAP,
    DEFAULT_MINOR_BUDGET,
    FilterResult,
    VerdictOutcome,
    VerdictScope,
)

from .certificates import MinorCertificate
from .verdict import FilterConfig, FilterOutcome


class SearchOptions(BaseModel):
    """Everything a worker needs to process one corpus line."""

    filters: FilterConfig = Field(default_factory=FilterConfig)
    budget: int = Field(DEFAULT_MINOR_BUDGET, ge=1)
    exact_cap: int = Field(DEFAULT_EXACT_CAP, ge=0)
    verdict_scope: VerdictScope = VerdictScope.SURVIVORS


class GraphRecord(BaseModel):
    """One JSONL line of a search report."""

    seq: int
    g6: str
    n: Optional[int] = None
    filters: List[FilterOutcome] = Field(default_factory=list)
    verdict: Optional[VerdictOutcome] = None
    h_cert: Optional[MinorCertificate] = None
    chi: Optional[int] = None
    reason: Optional[str] = None
    error: Optional[str] = None

    @property
    def survived(self) -> bool:
        """Parsed and passed every filter."""
        return self.error is None and all(f.result == FilterResult.PASS for f in self.filters)


class SearchReport(BaseModel):
    """Aggregate of a corpus run; records are kept in sequence order."""

    total: int = 0
    errors: int = 0
    rejections: Dict[str, int] = Field(default_factory=dict, description="Rejections per filter")
    verdicts: Dict[str, int] = Field(default_factory=dict, description="Records per verdict")
    survivors: List[str] = Field(default_factory=list, description="graph6 of graphs passing every filter")
    counterexamples: List[int] = Field(default_factory=list, description="seq of potential counterexamples")
    records: List[GraphRecord] = Field(default_factory=list)

    def add(self, record: GraphRecord, keep: bool = True) -> None:
        """
        Fold one record into the aggregate.

        Args:
            record (GraphRecord): Processed line.
            keep (bool): Also retain the record itself.
        """
        self.total += 1
        if keep:
            self.records.append(record)
        if record.error is not None:
            self.errors += 1
            return
        for step in record.filters:
            if step.result == FilterResult.REJECT:
                self.rejections[step.name.value] = self.rejections.get(step.name.value, 0) + 1
        if record.survived:
            self.survivors.append(record.g6)
        if record.verdict is not None:
            key = record.verdict.value
            self.verdicts[key] = self.verdicts.get(key, 0) + 1
            if record.verdict == VerdictOutcome.COUNTEREXAMPLE:
                self.counterexamples.append(record.seq)

    @property
    def has_counterexample(self) -> bool:
        """Whether any potential counterexample was recorded."""
        return bool(self.counterexamples)
