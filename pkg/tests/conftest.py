import pytest


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "criterion(num, label): marks a test as one numbered acceptance criterion",
    )
    config._criterion_outcomes = {}
    config._criterion_labels = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and report.when == "call":
        num, label = marker.args
        cfg = item.config
        cfg._criterion_labels[num] = label
        cfg._criterion_outcomes.setdefault(num, []).append(report.passed)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = getattr(config, "_criterion_outcomes", {})
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(outcomes):
        ok = all(outcomes[num])
        label = config._criterion_labels[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {num}: {label}")
