import pytest

from indsat import GF16, cayley_graph

CUBES = frozenset({1, 8, 10, 12, 15})


@pytest.fixture(scope="session")
def clebsch():
    return cayley_graph(GF16, CUBES)


def pytest_configure(config):
    config._acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
