import random

import pytest

from afsimplex import fixture_path
from afsimplex.lp_io import read_lp


def load_fixture(name):
    return read_lp(fixture_path(name).read_text(encoding="utf-8"))


@pytest.fixture
def example1():
    return load_fixture("example1.lp")


@pytest.fixture
def example2():
    return load_fixture("example2.lp")


@pytest.fixture
def rng():
    return random.Random(20090710)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
