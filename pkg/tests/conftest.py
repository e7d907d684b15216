import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1].removeprefix("test_")
    if report.when == "call" or report.failed:
        if report.passed:
            _criteria.setdefault(name, "PASS")
        else:
            _criteria[name] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        terminalreporter.write_line(f"{_criteria[name]}  {name}")
