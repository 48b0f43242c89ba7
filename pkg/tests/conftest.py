import pytest

_CRITERIA: dict[int, str] = {}


class _Line:
    detail = ""


@pytest.fixture
def criterion():
    """Holder for a one-line summary; the test outcome decides PASS/FAIL."""
    return _Line()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    line = item.funcargs.get("criterion")
    verdict = "PASS" if report.passed else "FAIL"
    _CRITERIA[marker.args[0]] = f"{verdict}  criterion {marker.args[0]}: {getattr(line, 'detail', '')}"


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        terminalreporter.write_line(_CRITERIA[number])
