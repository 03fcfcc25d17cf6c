import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from helpers import RESULTS  # noqa: E402


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        title, ok, elapsed = RESULTS[number]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{verdict}] criterion {number:2d}: {title} ({elapsed:.2f}s)")
