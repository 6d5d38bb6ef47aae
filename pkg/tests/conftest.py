import pytest

from superfront import BoundaryConfig

ACCEPTANCE_LINES: list[str] = []


def figure2(beta: float) -> BoundaryConfig:
    return BoundaryConfig(beta=beta, n_i=1.1, n_t=1.5, n_r=1.5, n_a=1.1)


@pytest.fixture
def fig2_099():
    return figure2(0.99)


@pytest.fixture
def fig2_09():
    return figure2(0.9)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
