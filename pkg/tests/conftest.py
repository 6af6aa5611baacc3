"""Collects acceptance-criterion outcomes and prints one line per criterion."""

from collections import OrderedDict

import pytest

_criteria: "OrderedDict[int, dict]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            num, title = mark.args
            _criteria.setdefault(num, {"title": title, "outcomes": []})
    # keep criteria in numeric order in the summary
    for key in sorted(_criteria):
        _criteria.move_to_end(key)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    entry = _criteria[mark.args[0]]
    if report.when == "call" or (report.when == "setup" and not report.passed):
        entry["outcomes"].append((item.name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num, entry in _criteria.items():
        outcomes = entry["outcomes"]
        if not outcomes:
            status = "NOT RUN"
        elif all(o == "passed" for _, o in outcomes):
            status = "PASS"
        elif all(o == "skipped" for _, o in outcomes):
            status = "SKIPPED"
        else:
            status = "FAIL"
        detail = ", ".join(f"{name}={o}" for name, o in outcomes if o != "passed")
        line = f"AC{num} {status:7s} {entry['title']}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))
