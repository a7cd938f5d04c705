import re
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "c_files"

_criteria: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def corpus():
    return CORPUS


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion."""

    class Recorder:
        def __init__(self):
            self.label = None

        def __call__(self, label):
            self.label = label

    rec = Recorder()
    yield rec
    if rec.label is not None:
        failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
        _criteria[rec.label] = (not failed, request.node.name)


@pytest.hookimpl(wrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    if rep.when == "call":
        item.rep_call = rep
    return rep


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: (int(re.match(r"\d+", s).group()), s)):
        ok, name = _criteria[label]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {label}  [{name}]")
