import pytest

from coxpyramids.geometry import enumerate_pyramids
from coxpyramids.growth import growth_report
from coxpyramids.volume import pyramid_volume

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def pyramids():
    return enumerate_pyramids()


@pytest.fixture(scope="session")
def growth_reports(pyramids):
    return {q: growth_report(q) for q in pyramids}


@pytest.fixture(scope="session")
def rates(growth_reports):
    return {q: r.tau for q, r in growth_reports.items()}


@pytest.fixture(scope="session")
def volumes(pyramids):
    return {q: pyramid_volume(q).total for q in pyramids}


@pytest.fixture
def acceptance():
    def record(criterion, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
