"""
Argument parser for the minorlab command line.
"""

import argparse

from minorlab.core.constants import (
    DEFAULT_EXACT_CAP,
    DEFAULT_FILTER_ORDER,
    DEFAULT_MINOR_BUDGET,
    DEFAULT_PROVEN_PATTERNS,
    VerdictScope,
)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _add_search_limits(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--exact-cap",
        type=int,
        default=DEFAULT_EXACT_CAP,
        help=f"largest order searched exactly (default {DEFAULT_EXACT_CAP})",
    )
    parser.add_argument(
        "--budget",
        type=_positive_int,
        default=DEFAULT_MINOR_BUDGET,
        help="node budget per exact minor search",
    )


def build_parser() -> argparse.ArgumentParser:
    """
    Build the top-level parser with one subcommand per verb.

    Returns:
        argparse.ArgumentParser: The parser.
    """
    parser = argparse.ArgumentParser(
        prog="minorlab",
        description="Hadwiger's conjecture checker for graphs with independence number at most two.",
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=None,
        help="log level (default MINORLAB_LOG_LEVEL or WARNING)",
    )
    parser.add_argument("--log-file", default=None, help="also write JSON logs to this file")
    sub = parser.add_subparsers(dest="command", metavar="VERB", required=True)

    check = sub.add_parser("check", help="HC verdict for one graph")
    check.add_argument("g6", help="graph in graph6")
    check.add_argument("--json", action="store_true", help="emit a JSON record")
    _add_search_limits(check)

    search = sub.add_parser("search", help="filter and decide a graph6 corpus, JSONL to stdout")
    search.add_argument("--input", default="-", help="graph6 file, '-' for stdin")
    search.add_argument(
        "--filters",
        default=",".join(f.value for f in DEFAULT_FILTER_ORDER),
        help="comma-separated filter chain",
    )
    search.add_argument(
        "--patterns",
        default=",".join(DEFAULT_PROVEN_PATTERNS),
        help="patterns used by the 'patterns' filter",
    )
    search.add_argument(
        "--jobs", type=_positive_int, default=None, help="worker processes (default MINORLAB_JOBS)"
    )
    search.add_argument(
        "--verdict",
        choices=[s.value for s in VerdictScope],
        default=VerdictScope.SURVIVORS.value,
        help="which graphs get a minor-search verdict",
    )
    search.add_argument("--cursor", default=None, help="plain-text resume cursor file")
    search.add_argument("--summary", default=None, help="write aggregate report JSON here")
    search.add_argument("--no-progress", action="store_true", help="hide the progress bar")
    _add_search_limits(search)

    gen = sub.add_parser("gen-tf", help="triangle-free graphs, one per isomorphism class")
    gen.add_argument("-n", type=int, required=True, help="order, 1..10")
    gen.add_argument(
        "--complement", action="store_true", help="emit complements (the alpha <= 2 corpus)"
    )

    ramsey = sub.add_parser("ramsey", help="R(3,k) constants and checks")
    ramsey.add_argument("--k", type=int, required=True)
    ramsey.add_argument("--mode", choices=["lower", "upper", "const"], default="const")
    ramsey.add_argument("--jobs", type=_positive_int, default=None)

    catalog = sub.add_parser("catalog", help="list the pattern catalog")
    catalog.add_argument("--emit", choices=["g6"], default=None, help="print name TAB graph6")

    audit = sub.add_parser("audit", help="separator claims audit for one graph")
    audit.add_argument("g6", help="graph in graph6")

    return parser
