import pytest

from wavearith import ApproxConfig


@pytest.fixture
def cfg() -> ApproxConfig:
    return ApproxConfig()


@pytest.fixture
def tight_cfg() -> ApproxConfig:
    return ApproxConfig(rel_tol=1e-12, abs_tol=1e-14)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # surface the acceptance scoreboard even when output capture is on
    try:
        from test_acceptance import SCOREBOARD
    except ImportError:
        return
    if SCOREBOARD:
        terminalreporter.section("acceptance scoreboard")
        for line in SCOREBOARD:
            terminalreporter.write_line(line)
