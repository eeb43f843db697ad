import subprocess
import sys

import pytest

from yukawa_ss.model import PhysicalParams

# filled by test_acceptance.py, echoed at the end of the run
ACCEPTANCE_LINES = {}


@pytest.fixture
def params():
    return PhysicalParams()


@pytest.fixture
def run_cli():
    def run(*args, check=None):
        proc = subprocess.run(
            [sys.executable, "-m", "yukawa_ss", *map(str, args)],
            capture_output=True,
            text=True,
            timeout=300,
        )
        if check is not None:
            assert proc.returncode == check, proc.stderr
        return proc

    return run


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
