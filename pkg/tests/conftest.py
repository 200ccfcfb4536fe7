import re

_CRITERIA: dict[int, tuple[str, str, float]] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        outcome = "PASS" if report.outcome == "passed" else "FAIL"
        _CRITERIA[n] = (m.group(2), outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        name, outcome, dur = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d} {name:<32s} {outcome}  ({dur:.2f}s)")
