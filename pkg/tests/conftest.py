import sys
from pathlib import Path

from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

import pytest

_VERDICTS = []


@pytest.fixture
def verdict():
    """verdict(n, text, ok): print one acceptance line, record it, then assert."""
    def check(n, text, ok):
        line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {text}"
        print(line)
        _VERDICTS.append(line)
        assert ok, line
    return check


def pytest_terminal_summary(terminalreporter):
    if _VERDICTS:
        terminalreporter.section("acceptance")
        for line in sorted(_VERDICTS, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
