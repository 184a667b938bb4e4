"""Collects acceptance-criterion outcomes and prints one line per criterion."""

import pytest

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    entry = _RESULTS.setdefault(number, {"title": title, "ok": True, "seconds": 0.0, "ran": False})
    if report.when == "call" or report.failed:
        entry["ran"] = True
        entry["seconds"] += report.duration
        if report.failed:
            entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        r = _RESULTS[number]
        status = "PASS" if r["ok"] and r["ran"] else "FAIL"
        terminalreporter.write_line(
            f"criterion {number:>2}: {status}  {r['title']}  ({r['seconds']:.1f}s)")
