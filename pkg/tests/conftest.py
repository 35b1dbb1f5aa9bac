import os

import pytest
from hypothesis import HealthCheck, settings

from cisupport import instances as inst

settings.register_profile(
    "default", deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow],
    print_blob=True,
)
settings.register_profile("explore", parent=settings.get_profile("default"), derandomize=False, max_examples=300)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("CISUPPORT_CACHE_DIR", str(tmp_path / "cache"))


@pytest.fixture(scope="session")
def ring_xy():
    return inst.hypersurface_xy()


@pytest.fixture(scope="session")
def ring_two_points():
    return inst.two_points()


@pytest.fixture(scope="session")
def ring_d():
    return inst.three_points()


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
