"""
Corpus search service: batching, worker processes, resumable cursor and progress.
"""

import sys
import time
from itertools import islice
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, TextIO, Tuple

from tqdm import tqdm

from minorlab.core.config import Settings
from minorlab.core.errors import ConfigurationError
from minorlab.core.logging import get_logger
from minorlab.graphcore.graph6 import iter_graph6_lines
from minorlab.models.report import SearchOptions, SearchReport
from minorlab.verdict.pipeline import process_batch

logger = get_logger(__name__)


def read_cursor(path: Path) -> int:
    """
    Last completed sequence number stored in a cursor file.

    Args:
        path (Path): Cursor file.

    Returns:
        int: The stored seq, or -1 when the file is missing or empty.

    Raises:
        ConfigurationError: If the file holds something other than an integer.
    """
    if not path.exists():
        return -1
    text = path.read_text(encoding="ascii").strip()
    if not text:
        return -1
    try:
        return int(text)
    except ValueError:
        raise ConfigurationError(
            f"cursor file {path} does not hold a sequence number", {"path": str(path)}
        ) from None


def write_cursor(path: Path, seq: int) -> None:
    """Atomically replace the cursor file contents with `seq`."""
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(f"{seq}\n", encoding="ascii")
    tmp.replace(path)


def _batches(items: Iterator[Tuple[int, str]], size: int) -> Iterator[List[Tuple[int, str]]]:
    while True:
        batch = list(islice(items, size))
        if not batch:
            return
        yield batch


class SearchService:
    """Service for running the filter/verdict pipeline over a graph6 stream."""

    def __init__(self, settings: Settings):
        """
        Initialize search service.

        Args:
            settings (Settings): Application settings.
        """
        self.settings = settings

    def run(
        self,
        lines: Iterable[str],
        out: TextIO,
        options: SearchOptions,
        jobs: Optional[int] = None,
        cursor: Optional[Path] = None,
        summary: Optional[Path] = None,
        progress: bool = True,
        batch_size: int = 256,
    ) -> SearchReport:
        """
        Stream JSONL records for every graph to `out`.

        Records are written in sequence order. With a cursor file, lines up to
        the stored sequence number are skipped and the cursor advances after
        each written batch.

        Args:
            lines (Iterable[str]): graph6 input lines.
            out (TextIO): Destination for JSONL records.
            options (SearchOptions): Filters, budget, cap and verdict scope.
            jobs (Optional[int]): Worker processes, settings.jobs by default.
            cursor (Optional[Path]): Resumable cursor file.
            summary (Optional[Path]): Where to write the aggregate report as JSON.
            progress (bool): Show a progress bar on stderr.
            batch_size (int): Lines handed to the pool at a time.

        Returns:
            SearchReport: Aggregate counts (records are not retained).
        """
        jobs = jobs or self.settings.jobs
        start_after = read_cursor(cursor) if cursor is not None else -1
        if start_after >= 0:
            logger.info("Resuming from cursor", extra={"cursor": str(cursor), "seq": start_after})

        numbered = (item for item in iter_graph6_lines(lines) if item[0] > start_after)
        report = SearchReport()
        started = time.perf_counter()

        with tqdm(desc="search", unit="graph", file=sys.stderr, disable=not progress) as bar:
            for batch in _batches(numbered, batch_size):
                for record in process_batch(batch, options, jobs):
                    out.write(record.model_dump_json(exclude_none=True) + "\n")
                    report.add(record, keep=False)
                out.flush()
                bar.update(len(batch))
                if cursor is not None:
                    write_cursor(cursor, batch[-1][0])

        if summary is not None:
            summary.write_text(
                report.model_dump_json(indent=2, exclude={"records"}) + "\n", encoding="utf-8"
            )

        logger.info(
            "Search completed",
            extra={
                "total": report.total,
                "errors": report.errors,
                "survivors": len(report.survivors),
                "counterexamples": len(report.counterexamples),
                "jobs": jobs,
                "duration_ms": round((time.perf_counter() - started) * 1000, 2),
            },
        )
        return report
