import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from acceptance_log import RESULTS  # noqa: E402


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        status, title, elapsed, limit = RESULTS[number]
        terminalreporter.write_line(f"AC{number:<2} {status}  {elapsed:6.2f}s / {limit:>3}s  {title}")
