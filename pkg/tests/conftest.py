from __future__ import annotations

import contextlib

import pytest

# Acceptance criteria report: one line per criterion at the end of the run.
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@contextlib.contextmanager
def criterion(key: str, title: str):
    try:
        yield
    except BaseException:
        ACCEPTANCE[key] = (False, title)
        raise
    else:
        ACCEPTANCE.setdefault(key, (True, title))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: [int(x) if x.isdigit() else x for x in k.split(".")]):
        ok, title = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}  {title}")


@pytest.fixture
def accept():
    return criterion
