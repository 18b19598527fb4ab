"""
Tests for the corpus search service.
"""

import io
import json

import pytest

from minorlab.core.errors import ConfigurationError
from minorlab.graphcore.graph import Graph
from minorlab.graphcore.graph6 import graph6_encode
from minorlab.models.report import SearchOptions
from minorlab.models.verdict import FilterConfig
from minorlab.services import search_service
from minorlab.services.search_service import SearchService, read_cursor, write_cursor


@pytest.fixture
def corpus(c5: Graph, k7: Graph, petersen: Graph):
    """Four graph6 lines, one of them malformed."""
    return [graph6_encode(c5), graph6_encode(petersen), "bad!", graph6_encode(k7)]


@pytest.fixture
def options() -> SearchOptions:
    """Only the alpha filter, verdicts for survivors."""
    return SearchOptions(filters=FilterConfig.from_names("alpha2"))


def test_run_writes_jsonl(test_settings, corpus, options):
    """Test one record per line in input order."""
    out = io.StringIO()
    report = SearchService(test_settings).run(corpus, out, options, progress=False)
    records = [json.loads(line) for line in out.getvalue().splitlines()]
    assert [r["seq"] for r in records] == [0, 1, 2, 3]
    assert records[0]["verdict"] == "holds"
    assert records[1]["filters"][0]["result"] == "reject"
    assert "error" in records[2]
    assert report.total == 4
    assert report.records == []


def test_cursor_resume(test_settings, corpus, options, tmp_path):
    """Test that a stored cursor skips finished lines and advances."""
    cursor = tmp_path / "cursor"
    write_cursor(cursor, 1)
    out = io.StringIO()
    SearchService(test_settings).run(corpus, out, options, cursor=cursor, progress=False, batch_size=1)
    seqs = [json.loads(line)["seq"] for line in out.getvalue().splitlines()]
    assert seqs == [2, 3]
    assert read_cursor(cursor) == 3


def test_summary_file(test_settings, corpus, options, tmp_path):
    """Test the aggregate JSON without per-graph records."""
    summary = tmp_path / "summary.json"
    SearchService(test_settings).run(corpus, io.StringIO(), options, summary=summary, progress=False)
    data = json.loads(summary.read_text())
    assert data["total"] == 4
    assert data["errors"] == 1
    assert data["rejections"] == {"alpha2": 1}
    assert "records" not in data


def test_jobs_default_from_settings(test_settings, corpus, options, mocker):
    """Test that the worker count falls back to settings."""
    spy = mocker.spy(search_service, "process_batch")
    SearchService(test_settings).run(corpus, io.StringIO(), options, progress=False)
    assert spy.call_args.args[2] == test_settings.jobs


def test_read_cursor(tmp_path):
    """Test missing, empty and malformed cursor files."""
    path = tmp_path / "cursor"
    assert read_cursor(path) == -1
    path.write_text("")
    assert read_cursor(path) == -1
    path.write_text("seven")
    with pytest.raises(ConfigurationError):
        read_cursor(path)
    write_cursor(path, 7)
    assert read_cursor(path) == 7
    assert not (tmp_path / "cursor.tmp").exists()
