from __future__ import annotations

import pytest

_RESULTS: dict[int, tuple[str, str, float | None]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        elapsed = getattr(item, "criterion_elapsed", None)
        _RESULTS[number] = ("PASS" if report.passed else "FAIL", title, elapsed)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        status, title, elapsed = _RESULTS[number]
        took = "" if elapsed is None else f" ({elapsed:.2f}s)"
        terminalreporter.write_line(f"[{status}] criterion {number:2d}: {title}{took}")
    passed = sum(1 for s, _, _ in _RESULTS.values() if s == "PASS")
    terminalreporter.write_line(f"{passed}/{len(_RESULTS)} criteria passed")
