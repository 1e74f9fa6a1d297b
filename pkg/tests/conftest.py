import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from buchsbaum import oracle  # noqa: E402

ACCEPTANCE: dict[int, str] = {}


@pytest.fixture(scope="session")
def small_census():
    return {n: oracle.census(n) for n in (3, 4, 5)}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
