"""Tests for the structlog setup."""

import io
import sys

from src.core.config.settings import Settings
from src.core.observability import configure_logging, get_logger


def test_logs_follow_the_current_stderr(monkeypatch):
    first = io.StringIO()
    monkeypatch.setattr(sys, "stderr", first)
    configure_logging(Settings(log_level="INFO", log_format="json"))
    first.close()

    second = io.StringIO()
    monkeypatch.setattr(sys, "stderr", second)
    get_logger("tests.logger").info("stream_swapped", scenes=3)

    assert '"event": "stream_swapped"' in second.getvalue()
    assert '"scenes": 3' in second.getvalue()


def test_level_filters_records(monkeypatch):
    sink = io.StringIO()
    monkeypatch.setattr(sys, "stderr", sink)
    configure_logging(Settings(log_level="WARNING"))
    log = get_logger("tests.logger")
    log.info("hidden")
    log.warning("shown")
    assert "hidden" not in sink.getvalue()
    assert "shown" in sink.getvalue()
