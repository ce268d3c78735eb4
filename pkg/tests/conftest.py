import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=100, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=300, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def census7():
    from pushclique.census import census_planar_upc
    return census_planar_upc(7, threads=1)


@pytest.fixture(scope="session")
def census8_timed():
    import time

    from pushclique.census import census_planar_upc
    start = time.perf_counter()
    census = census_planar_upc(8, threads=1)
    return census, time.perf_counter() - start


@pytest.fixture(scope="session")
def census8(census8_timed):
    return census8_timed[0]


@pytest.fixture(scope="session")
def minimal8(census8):
    from pushclique.census import minimal_list
    return minimal_list(census8)


_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    lines = request.config.stash.setdefault(_ACCEPTANCE, [])

    def record(number, ok, message):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}: {message}"
        lines.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
