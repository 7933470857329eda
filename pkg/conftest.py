# -*- coding: utf-8 -*-
"""Pytest configuration."""
import sys
from typing import List

from _pytest.config import Config
from _pytest.config.argparsing import Parser
from _pytest.python import Function
import pytest

sys.dont_write_bytecode = True
sys.stdout = (
    sys.stderr
)  # allow printing of pytest output when running pytest-xdist https://stackoverflow.com/questions/27006884/pytest-xdist-without-capturing-output


def pytest_addoption(parser: Parser) -> None:
    parser.addoption(
        "--include-slow-tests",
        action="store_true",
        default=False,
        help="run the exhaustive agreement sweeps over longer words and larger charts",
    )


def pytest_collection_modifyitems(config: Config, items: List[Function]) -> None:
    if config.getoption("--include-slow-tests"):
        return
    skip_slow = pytest.mark.skip(
        reason="exhaustive sweeps are skipped unless --include-slow-tests is set"
    )
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
