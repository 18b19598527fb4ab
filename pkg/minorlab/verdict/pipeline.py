"""
Corpus search: filter trace plus verdict per graph, aggregated in input order.
"""

from functools import partial
from typing import Iterable, List, Optional, Tuple

from minorlab.core.constants import (
    DEFAULT_EXACT_CAP,
    DEFAULT_MINOR_BUDGET,
    VerdictOutcome,
    VerdictScope,
)
from minorlab.core.errors import GraphFormatError, MinorLabError
from minorlab.core.logging import get_logger
from minorlab.graphcore.graph import Graph
from minorlab.graphcore.graph6 import graph6_decode, iter_graph6_lines
from minorlab.models.report import GraphRecord, SearchOptions, SearchReport
from minorlab.models.verdict import FilterConfig, FilterOutcome
from minorlab.utils.parallel import run_parallel

from .filters import BaseFilter, FilterFactory
from .theorems import hc_verdict

logger = get_logger(__name__)


def run_filters(g: Graph, chain: List[BaseFilter]) -> List[FilterOutcome]:
    """
    Apply filters in order, stopping at the first rejection.

    Args:
        g (Graph): Candidate graph.
        chain (List[BaseFilter]): Filters.

    Returns:
        List[FilterOutcome]: Trace up to and including the first reject.
    """
    trace = []
    for f in chain:
        outcome = f.apply(g)
        trace.append(outcome)
        if not outcome.passed:
            break
    return trace


def process_line(item: Tuple[int, str], options: SearchOptions) -> GraphRecord:
    """
    Parse, filter and (per scope) decide one corpus line.

    Args:
        item (Tuple[int, str]): (sequence number, graph6 line).
        options (SearchOptions): Filters, budget, cap and verdict scope.

    Returns:
        GraphRecord: The JSONL record; parse failures become error records.
    """
    seq, line = item
    try:
        g = graph6_decode(line)
    except GraphFormatError as e:
        return GraphRecord(seq=seq, g6=line, error=e.message)

    record = GraphRecord(seq=seq, g6=line, n=g.n)
    try:
        record.filters = run_filters(g, FilterFactory.create_chain(options.filters))
        survived = record.survived
        if options.verdict_scope == VerdictScope.ALL or (
            options.verdict_scope == VerdictScope.SURVIVORS and survived
        ):
            verdict = hc_verdict(g, options.budget, options.exact_cap)
            record.verdict = verdict.outcome
            record.h_cert = verdict.certificate
            record.chi = verdict.chi
            record.reason = verdict.reason
        else:
            record.verdict = VerdictOutcome.UNKNOWN
            record.reason = "rejected by filters" if not survived else "verdict not requested"
    except MinorLabError as e:
        logger.warning("Graph processing failed", extra={"seq": seq, "error": e.message})
        record.error = e.message
    return record


def process_batch(
    items: List[Tuple[int, str]], options: SearchOptions, jobs: int = 1
) -> List[GraphRecord]:
    """
    Process a batch of numbered lines, optionally in worker processes.

    Args:
        items (List[Tuple[int, str]]): Numbered lines.
        options (SearchOptions): Processing options.
        jobs (int): Worker processes.

    Returns:
        List[GraphRecord]: Records sorted by sequence number.
    """
    records = run_parallel(partial(process_line, options=options), items, jobs=jobs)
    return sorted(records, key=lambda r: r.seq)


def search_corpus(
    stream: Iterable[str],
    cfg: Optional[FilterConfig] = None,
    budget: int = DEFAULT_MINOR_BUDGET,
    exact_cap: int = DEFAULT_EXACT_CAP,
    verdict_scope: VerdictScope = VerdictScope.SURVIVORS,
    jobs: int = 1,
) -> SearchReport:
    """
    Run the filter chain and verdicts over a graph6 stream.

    Args:
        stream (Iterable[str]): graph6 lines; blanks and '#' comments skipped.
        cfg (Optional[FilterConfig]): Filters, default chain when None.
        budget (int): Minor-search node budget per graph.
        exact_cap (int): Largest order searched exactly.
        verdict_scope (VerdictScope): Which graphs get a verdict.
        jobs (int): Worker processes.

    Returns:
        SearchReport: Records in input order with aggregate counts.
    """
    options = SearchOptions(
        filters=cfg or FilterConfig(),
        budget=budget,
        exact_cap=exact_cap,
        verdict_scope=verdict_scope,
    )
    report = SearchReport()
    for record in process_batch(list(iter_graph6_lines(stream)), options, jobs):
        report.add(record)
    logger.info(
        "Corpus search finished",
        extra={
            "total": report.total,
            "errors": report.errors,
            "survivors": len(report.survivors),
            "counterexamples": len(report.counterexamples),
        },
    )
    return report
