import re
from collections import defaultdict

_CRITERION = re.compile(r"test_acceptance\.py::test_c(\d+)_(\w+?)(?:\[|$)")

_results: dict[int, dict] = defaultdict(lambda: {"name": "", "passed": 0, "failed": 0})


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    k = int(m.group(1))
    if not _results[k]["name"]:
        _results[k]["name"] = m.group(2).replace("_", " ")
    if report.passed:
        _results[k]["passed"] += 1
    elif report.failed:
        _results[k]["failed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for k in sorted(_results):
        r = _results[k]
        verdict = "PASS" if r["failed"] == 0 else "FAIL"
        detail = f"{r['passed']} passed"
        if r["failed"]:
            detail += f", {r['failed']} failed"
        terminalreporter.write_line(f"criterion {k} ({r['name']}): {verdict} ({detail})")
