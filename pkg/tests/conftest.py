import pytest

from inclusion_diagrams import corpus

_acceptance: dict[int, list[str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for mark in report.keywords:
        if mark.startswith("criterion_"):
            _acceptance.setdefault(int(mark.split("_")[1]), []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        outcomes = _acceptance[number]
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}")


@pytest.fixture(params=corpus.NAMES)
def corpus_name(request):
    return request.param


@pytest.fixture
def load():
    return corpus.load
