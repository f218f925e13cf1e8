import pytest

from helpers import swap_set, swap_z5_set, three_set


@pytest.fixture(scope="session")
def swap():
    return swap_set()


@pytest.fixture(scope="session")
def swap_z5():
    return swap_z5_set()


@pytest.fixture(scope="session")
def three():
    return three_set()


# -- acceptance reporting --------------------------------------------------------

_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion this test checks")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    number, title = marker.args
    entry = _CRITERIA.setdefault(number, {"title": title, "ok": True, "notes": []})
    if report.failed:
        entry["ok"] = False
        msg = str(report.longrepr.reprcrash.message) if hasattr(report.longrepr, "reprcrash") else ""
        entry["notes"].append(f"{item.name}: {msg.splitlines()[0] if msg else 'failed'}")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entry = _CRITERIA[number]
        status = "PASS" if entry["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {number} ({entry['title']}): {status}")
        for note in entry["notes"]:
            terminalreporter.write_line(f"    {note}")
