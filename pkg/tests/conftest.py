import os

import pytest
from hypothesis import settings

from mvpoly.rootsys import load_root_system
from mvpoly.tables import builtin_table

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# one line per acceptance criterion, filled in by tests/test_acceptance.py
ACCEPTANCE_LINES = {}


@pytest.fixture(scope="session")
def tables():
    return {g: builtin_table(g) for g in ("A1", "A2", "C2", "A3")}


@pytest.fixture(scope="session")
def systems():
    return {g: load_root_system(g) for g in ("A1", "A2", "C2", "A3")}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
