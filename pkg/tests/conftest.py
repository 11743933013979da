import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

_ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def acceptance():
    """report(n, ok, detail): record criterion n, print its line, then assert."""

    def report(n: int, ok: bool, detail: str):
        _ACCEPTANCE[n] = (ok, detail)
        print(f"acceptance {n}: {'PASS' if ok else 'FAIL'} - {detail}")
        assert ok, detail

    return report


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[n]
        terminalreporter.write_line(f"acceptance {n}: {'PASS' if ok else 'FAIL'} - {detail}")
