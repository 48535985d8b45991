import os
import re

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize=True,
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# filled by tests/test_acceptance.py; printed after the run
ACCEPTANCE_LINES: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES, key=lambda k: (int(re.match(r"\d+", k).group()), k)):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])


@pytest.fixture
def acceptance():
    def record(key: str, ok: bool, detail: str) -> None:
        ACCEPTANCE_LINES[key] = f"CRITERION {key}: {'PASS' if ok else 'FAIL'} ({detail})"

    return record
