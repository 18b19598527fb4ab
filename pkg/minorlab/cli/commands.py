"""
Handlers for each CLI verb. Data goes to `out`; diagnostics go to the log on stderr.
"""

import argparse
import sys
from pathlib import Path
from typing import Callable, Dict, TextIO

from pydantic import ValidationError

from minorlab.core.config import Settings
from minorlab.core.constants import (
    EXIT_COUNTEREXAMPLE,
    EXIT_ERROR,
    EXIT_OK,
    VerdictOutcome,
    VerdictScope,
)
from minorlab.core.errors import ConfigurationError
from minorlab.graphcore.generate import generate_triangle_free
from minorlab.graphcore.graph import complement
from minorlab.graphcore.graph6 import graph6_decode, graph6_encode
from minorlab.models.report import GraphRecord, SearchOptions
from minorlab.models.verdict import FilterConfig
from minorlab.patterns.catalog import catalog
from minorlab.ramsey.numbers import r3_constant
from minorlab.ramsey.verify import verify_lower_witness, verify_upper_small
from minorlab.services.search_service import SearchService
from minorlab.verdict.audit import claims_audit
from minorlab.verdict.theorems import hc_verdict

Handler = Callable[[argparse.Namespace, Settings, TextIO], int]


def _search_options(args: argparse.Namespace) -> SearchOptions:
    patterns = [p.strip() for p in args.patterns.split(",") if p.strip()]
    try:
        cfg = FilterConfig.from_names(args.filters, patterns=patterns)
        return SearchOptions(
            filters=cfg,
            budget=args.budget,
            exact_cap=args.exact_cap,
            verdict_scope=VerdictScope(args.verdict),
        )
    except ValidationError as e:
        raise ConfigurationError("invalid search options", {"errors": e.errors()}) from None


def cmd_check(args: argparse.Namespace, settings: Settings, out: TextIO) -> int:
    """One verdict for one graph."""
    g = graph6_decode(args.g6)
    verdict = hc_verdict(g, args.budget, args.exact_cap)
    if args.json:
        record = GraphRecord(
            seq=0,
            g6=args.g6,
            n=g.n,
            verdict=verdict.outcome,
            h_cert=verdict.certificate,
            chi=verdict.chi,
            reason=verdict.reason,
        )
        out.write(record.model_dump_json(exclude_none=True) + "\n")
    else:
        parts = [verdict.outcome.value]
        if verdict.chi is not None:
            parts.append(f"chi={verdict.chi}")
        if verdict.h is not None:
            parts.append(f"minor=K{verdict.h}")
        if verdict.reason:
            parts.append(f"reason={verdict.reason}")
        out.write(" ".join(parts) + "\n")
    return EXIT_COUNTEREXAMPLE if verdict.outcome == VerdictOutcome.COUNTEREXAMPLE else EXIT_OK


def cmd_search(args: argparse.Namespace, settings: Settings, out: TextIO) -> int:
    """Corpus search streaming JSONL."""
    options = _search_options(args)
    service = SearchService(settings)
    kwargs = dict(
        out=out,
        options=options,
        jobs=args.jobs,
        cursor=Path(args.cursor) if args.cursor else None,
        summary=Path(args.summary) if args.summary else None,
        progress=not args.no_progress,
    )
    if args.input == "-":
        report = service.run(sys.stdin, **kwargs)
    else:
        path = Path(args.input)
        if not path.is_file():
            raise ConfigurationError(f"input file not found: {path}", {"path": str(path)})
        with path.open("r", encoding="ascii", errors="replace") as f:
            report = service.run(f, **kwargs)
    return EXIT_COUNTEREXAMPLE if report.has_counterexample else EXIT_OK


def cmd_gen_tf(args: argparse.Namespace, settings: Settings, out: TextIO) -> int:
    """graph6 stream of triangle-free classes or their complements."""
    for g in generate_triangle_free(args.n):
        out.write(graph6_encode(complement(g) if args.complement else g) + "\n")
    return EXIT_OK


def cmd_ramsey(args: argparse.Namespace, settings: Settings, out: TextIO) -> int:
    """R(3,k) constant, lower witness or small upper-bound check."""
    value = r3_constant(args.k)
    if args.mode == "const":
        out.write(f"R(3,{args.k}) = {value}\n")
        return EXIT_OK
    if args.mode == "lower":
        witness = verify_lower_witness(args.k)
        out.write(f"{graph6_encode(witness)}\tverified\n")
        return EXIT_OK
    ok = verify_upper_small(args.k, jobs=args.jobs or settings.jobs)
    out.write("verified\n" if ok else "failed\n")
    return EXIT_OK if ok else EXIT_ERROR


def cmd_catalog(args: argparse.Namespace, settings: Settings, out: TextIO) -> int:
    """Pattern catalog listing."""
    for p in catalog():
        if args.emit == "g6":
            out.write(f"{p.name}\t{graph6_encode(p.graph)}\n")
        else:
            out.write(f"{p.name}\tn={p.graph.n}\tm={p.graph.edge_count()}\t{p.provenance}\n")
    return EXIT_OK


def cmd_audit(args: argparse.Namespace, settings: Settings, out: TextIO) -> int:
    """Separator-claims audit report as JSON."""
    report = claims_audit(graph6_decode(args.g6))
    out.write(report.model_dump_json(indent=2, exclude_none=True) + "\n")
    return EXIT_OK


COMMANDS: Dict[str, Handler] = {
    "check": cmd_check,
    "search": cmd_search,
    "gen-tf": cmd_gen_tf,
    "ramsey": cmd_ramsey,
    "catalog": cmd_catalog,
    "audit": cmd_audit,
}
