"""Tests for the stderr debug log."""

import pytest

from shared.debug_log import DebugLog, debug


def test_singleton():
    assert DebugLog() is debug


def test_threshold(capsys):
    debug.set_level("WARN")
    debug.info("hidden")
    debug.warn("shown")
    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err == "[WARN] shown\n"
    # the buffer keeps everything
    assert debug.get_messages(2) == ["[INFO] hidden", "[WARN] shown"]


def test_aliases_and_errors():
    debug.set_level("warning")
    debug.set_level("debug")
    with pytest.raises(ValueError):
        debug.set_level("loud")


def test_clear():
    debug.error("boom")
    assert "[ERROR] boom" in debug.get_all_text()
    debug.clear()
    assert debug.get_messages() == []
