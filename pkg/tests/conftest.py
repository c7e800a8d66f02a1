import pytest

# criterion number -> [title, all passed, ran at least once]
_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("criterion")
    if mark:
        outcome.get_result().criterion = mark.args


def pytest_runtest_logreport(report):
    tag = getattr(report, "criterion", None)
    if tag is None or not (report.failed or report.when == "call"):
        return
    number, title = tag
    entry = _criteria.setdefault(number, [title, True, False])
    entry[2] = True
    if report.failed:
        entry[1] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok, _ = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
