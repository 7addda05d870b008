import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fdbseries import _kernels_py  # noqa: E402

BACKENDS = [pytest.param(_kernels_py, id="python")]
try:
    from fdbseries import _kernels
    BACKENDS.append(pytest.param(_kernels, id="cython"))
except ImportError:
    BACKENDS.append(pytest.param(None, id="cython", marks=pytest.mark.skip("extension not built")))


@pytest.fixture(params=BACKENDS)
def kernels(request):
    return request.param


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
