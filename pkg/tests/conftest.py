import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from orbitcode.galois import FieldParams, build_tower  # noqa: E402

GRID = [(2, 1, 3), (2, 1, 5), (3, 1, 2), (3, 1, 4), (2, 2, 3), (5, 1, 2)]


def tower(p, k, m):
    return build_tower(FieldParams(p, k, m))


@pytest.fixture
def f23():
    return tower(2, 1, 3)


@pytest.fixture
def f32():
    return tower(3, 1, 2)


@pytest.fixture(params=GRID, ids=lambda g: f"p{g[0]}k{g[1]}m{g[2]}")
def grid_field(request):
    return tower(*request.param)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
