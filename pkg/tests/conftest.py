import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA = {}
_PATTERN = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    match = _PATTERN.search(report.nodeid)
    if not match:
        return
    key = int(match.group(1))
    failed = report.failed or (report.when == "call" and report.skipped)
    entry = _CRITERIA.setdefault(key, {"name": match.group(2).replace("_", " "), "ok": True, "elapsed": None})
    if failed:
        entry["ok"] = False
    for name, value in report.user_properties:
        if name == "elapsed":
            entry["elapsed"] = value


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA):
        e = _CRITERIA[key]
        timing = f" ({e['elapsed']})" if e["elapsed"] else ""
        terminalreporter.write_line(f"criterion {key}: {'PASS' if e['ok'] else 'FAIL'} - {e['name']}{timing}")
