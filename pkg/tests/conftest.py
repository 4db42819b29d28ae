import pytest

from bsindex import load_iris

_acceptance_results = []


@pytest.fixture(scope="session")
def iris():
    dataset, species = load_iris()
    return dataset


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _acceptance_results.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria")
    for name, outcome in _acceptance_results:
        terminalreporter.write_line(f"  {'PASS' if outcome == 'passed' else 'FAIL'}: {name}")
