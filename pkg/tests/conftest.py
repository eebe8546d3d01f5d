import random

import pytest

from orbiclass.catalog import make_family
from orbiclass.groups import closure


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=20240611, help="seed for randomized tests")


@pytest.fixture
def rng(request):
    return random.Random(request.config.getoption("--seed"))


_GROUPS = {}


def group_of(spec: str, cap: int = 100_000):
    """Closed catalog group, memoized across the session."""
    if spec not in _GROUPS:
        _GROUPS[spec] = closure(make_family(spec), cap=cap)
    return _GROUPS[spec]


@pytest.fixture(scope="session")
def group():
    return group_of


# acceptance criteria record one line each; printed in the terminal summary
ACCEPTANCE: dict[int, str] = {}


@pytest.fixture(scope="session")
def acceptance():
    def record(number: int, ok: bool, detail: str) -> None:
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE[number] = line
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
