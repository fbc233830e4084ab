import sys
from pathlib import Path

# make the reference implementations in tests/oracles.py importable
sys.path.insert(0, str(Path(__file__).parent))

# acceptance-criterion outcomes, recorded by tests/test_acceptance.py
CRITERION_RESULTS: list[tuple[str, bool]] = []


def pytest_terminal_summary(terminalreporter):
    if not CRITERION_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in CRITERION_RESULTS:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}")
