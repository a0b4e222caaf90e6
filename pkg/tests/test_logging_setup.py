"""Tests for logging configuration."""

import io
import logging

from downup_engine.utils.logging_setup import get_logger, setup_logging


def test_records_go_to_the_configured_stream():
    stream = io.StringIO()
    logger = setup_logging("debug", stream=stream)
    assert logger.level == logging.DEBUG
    get_logger("downup_engine.tests").debug("solver window 3")
    line = stream.getvalue().strip()
    assert line.endswith("| DEBUG    | downup_engine.tests | solver window 3")


def test_setup_is_idempotent_and_rebinds():
    first, second = io.StringIO(), io.StringIO()
    setup_logging("INFO", stream=first)
    logger = setup_logging("INFO", stream=second)
    assert len(logger.handlers) == 1
    get_logger("downup_engine.tests").info("regime chosen")
    assert first.getvalue() == ""
    assert "regime chosen" in second.getvalue()


def test_unknown_level_falls_back_to_warning():
    logger = setup_logging("chatty", stream=io.StringIO())
    assert logger.level == logging.WARNING
