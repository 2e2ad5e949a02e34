import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from dualham.graph import Graph  # noqa: E402


@st.composite
def graphs(draw, min_n=0, max_n=7, max_m=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m)) if pairs else []
    return Graph(n, tuple(chosen))


@st.composite
def connected_graphs(draw, min_n=1, max_n=7, extra=4):
    """A random spanning tree plus a few extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), unique=True, max_size=extra)))
    return Graph(n, tuple(edges))


@pytest.fixture
def c4():
    return Graph(4, ((0, 1), (1, 2), (2, 3), (3, 0)))


def pytest_terminal_summary(terminalreporter):
    import report

    if report.LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(report.LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
