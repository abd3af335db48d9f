"""Prints a one-line verdict per acceptance criterion after the run."""

_CRITERIA: dict[str, str] = {}


def pytest_runtest_logreport(report):
    marker = "test_acceptance.py::test_criterion_"
    if marker not in report.nodeid:
        return
    name = report.nodeid.split("::test_criterion_")[1]
    if report.when == "call":
        _CRITERIA[name] = "pass" if report.passed else "FAIL"
    elif report.failed:  # setup or teardown error
        _CRITERIA[name] = "FAIL"
    elif report.skipped:
        _CRITERIA[name] = "skipped"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        number, _, title = name.partition("_")
        line = f"criterion {int(number)} ({title.replace('_', ' ')}): {_CRITERIA[name]}"
        terminalreporter.write_line(line)
