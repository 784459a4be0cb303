"""Collects acceptance outcomes and prints one line per criterion."""

import pytest

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or (report.when != "call" and report.passed):
        return
    number, title = marker.args
    entry = _results.setdefault(number, {"title": title, "passed": True, "failures": []})
    if report.failed or report.skipped:
        entry["passed"] = False
        entry["failures"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        entry = _results[number]
        verdict = "PASS" if entry["passed"] else "FAIL"
        line = f"criterion {number}: {verdict}  {entry['title']}"
        if entry["failures"]:
            line += "  (failed: " + ", ".join(entry["failures"]) + ")"
        terminalreporter.write_line(line)
