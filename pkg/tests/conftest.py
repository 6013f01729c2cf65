import os

import pytest
from hypothesis import HealthCheck, settings

_LOG_KEY = pytest.StashKey[list]()

settings.register_profile(
    "default",
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("ci", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def acceptance_log(pytestconfig):
    """Collects one line per acceptance criterion for the terminal summary."""
    return pytestconfig.stash.setdefault(_LOG_KEY, [])


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LOG_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
