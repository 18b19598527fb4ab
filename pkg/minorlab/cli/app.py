"""
Command-line entry: parse, configure logging, dispatch, map errors to exit codes.
"""

import sys
from typing import List, Optional, TextIO

from minorlab.core.config import get_settings
from minorlab.core.constants import EXIT_ERROR, EXIT_OK
from minorlab.core.errors import MinorLabError
from minorlab.core.logging import get_logger, setup_logging

from .commands import COMMANDS
from .parser import build_parser

logger = get_logger(__name__)


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """
    Run one CLI invocation.

    Args:
        argv (Optional[List[str]]): Arguments without the program name; sys.argv[1:] by default.
        out (Optional[TextIO]): Data stream, stdout by default.

    Returns:
        int: 0 when no potential counterexample was recorded, 1 when one was, 2 on errors.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_ERROR

    settings = get_settings()
    setup_logging(
        log_level=args.log_level or settings.log_level,
        log_file=args.log_file or settings.log_file,
        json_format=settings.log_json,
    )
    out = out or sys.stdout

    try:
        return COMMANDS[args.command](args, settings, out)
    except MinorLabError as e:
        logger.error(
            f"{args.command} failed: {e.message}",
            extra={"error_type": type(e).__name__, "exit_code": e.exit_code, "details": e.details},
        )
        sys.stderr.write(f"minorlab {args.command}: {e.message}\n")
        return e.exit_code
    except Exception as e:
        logger.exception(f"Unexpected error in {args.command}: {e}")
        return EXIT_ERROR


def main() -> None:
    """Console-script entry point."""
    sys.exit(run())
