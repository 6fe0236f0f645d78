import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = _CRITERIA.get(report.nodeid)
    if marker is None:
        return
    number, text, outcomes = marker
    outcomes.append(report.outcome)


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _CRITERIA[item.nodeid] = (m.args[0], m.args[1], [])


def pytest_terminal_summary(terminalreporter):
    if not any(outcomes for _, _, outcomes in _CRITERIA.values()):
        return
    by_number = {}
    for number, text, outcomes in _CRITERIA.values():
        entry = by_number.setdefault(number, [text, []])
        entry[1].extend(outcomes)
    terminalreporter.section("acceptance criteria")
    for number in sorted(by_number):
        text, outcomes = by_number[number]
        if not outcomes:
            continue
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {number:2d}: {text}")
