import pytest

_acceptance = []


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    num, title = marker.args
    _acceptance.append((num, title, call.excinfo is None))


@pytest.hookimpl(trylast=True)
def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, ok in sorted(_acceptance):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] AC{num}: {title}")
