import pytest

from gravclock.constants import CODATA2018, UNIT_CONSTANTS, CentralBody

from reference_values import EARTH_MASS, EARTH_RADIUS, EARTH_SPIN


@pytest.fixture
def earth():
    return CentralBody(mass=EARTH_MASS, radius=EARTH_RADIUS, spin_omega=EARTH_SPIN)


@pytest.fixture
def codata():
    return CODATA2018


@pytest.fixture
def unit():
    return UNIT_CONSTANTS


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        ok, title, detail = RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {detail}")
