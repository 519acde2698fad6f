import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gravclock.constants import CODATA2018, UNIT_CONSTANTS, CentralBody, derive_body, keplerian_frequency
from gravclock.errors import InvalidInputError, RegimeError
from gravclock.gem import (
    FirstOrderRegimeWarning,
    clock_effect_gem,
    equatorial_field,
    gem_clock_effect,
    gravitomagnetic_moment,
    level_pair,
    periods_first_order,
    potential_energy,
    rewritten_field,
)
from gravclock.kerr import Method

from reference_values import (
    EARTH_DELTA_E_AT_LEO,
    EARTH_DELTA_T,
    EARTH_FIELD_AT_GEO,
    EARTH_MASS,
    EARTH_OMEGA_K_AT_LEO,
    GEO_RADIUS,
    LEO_RADIUS,
)

bodies = st.builds(
    CentralBody,
    mass=st.floats(min_value=1e15, max_value=1e31),
    radius=st.floats(min_value=1.0, max_value=1e8),
    spin_omega=st.one_of(
        st.just(0.0), st.floats(min_value=1e-12, max_value=1e-2), st.floats(min_value=-1e-2, max_value=-1e-12)
    ),
)


def test_field_without_spin():
    assert equatorial_field(CentralBody(1e24, 1e6, 0.0), 2e6).magnitude == 0.0


def test_field_inverse_cube():
    body = CentralBody(1e24, 1e6, 1e-4)
    near = equatorial_field(body, 3e6).magnitude
    far = equatorial_field(body, 6e6).magnitude
    assert far == pytest.approx(near / 8.0, rel=1e-15)


def test_field_direction_follows_spin():
    assert equatorial_field(CentralBody(1.0, 1.0, -2.0), 2.0).direction == -1
    assert equatorial_field(CentralBody(1.0, 1.0, 2.0), 2.0).direction == 1


def test_earth_field_at_geo(earth):
    assert equatorial_field(earth, GEO_RADIUS).magnitude == pytest.approx(EARTH_FIELD_AT_GEO, rel=1e-11)


def test_field_rejects_bad_radius(earth):
    with pytest.raises(InvalidInputError):
        equatorial_field(earth, 0.0)


def test_rewritten_field_plug_ins():
    assert rewritten_field(0.0, 5.0, 3.0) == 0.0
    assert rewritten_field(1.0, 1.0, 1.0, UNIT_CONSTANTS) == 2.0


@settings(max_examples=300)
@given(bodies, st.floats(min_value=1.0001, max_value=100.0))
def test_field_forms_agree(body, scale):
    r = body.radius * scale
    sample = equatorial_field(body, r)
    J = derive_body(body).spin_J
    omega_k = keplerian_frequency(body.mass, r)
    assert sample.direction * sample.magnitude == pytest.approx(
        rewritten_field(J, body.mass, omega_k), rel=1e-13, abs=0.0
    )


def test_gravitomagnetic_moment(codata):
    assert gravitomagnetic_moment(1, codata) == -codata.hbar / 2
    assert gravitomagnetic_moment(-1, codata) == codata.hbar / 2
    with pytest.raises(InvalidInputError):
        gravitomagnetic_moment(0, codata)


def test_potential_energy_plug_ins(unit):
    assert potential_energy(1, 1.0, 1.0, 1.0, unit) == 1.0
    assert potential_energy(1, 0.0, 1.0, 1.0, unit) == 0.0
    assert potential_energy(-1, 0.0, 1.0, 1.0, unit) == 0.0
    assert potential_energy(1, 2.0, 3.0, 0.5, unit) + potential_energy(-1, 2.0, 3.0, 0.5, unit) == 0.0


@settings(max_examples=200)
@given(
    J=st.floats(min_value=-1e40, max_value=1e40),
    mass=st.floats(min_value=1e10, max_value=1e31),
    omega_k=st.floats(min_value=1e-8, max_value=1.0),
    Lz=st.sampled_from([1, -1]),
)
def test_potential_energy_closed_form(J, mass, omega_k, Lz):
    hbar, c = CODATA2018.hbar, CODATA2018.c
    closed = Lz * hbar * omega_k**2 * J / (mass * c**2)
    assert potential_energy(Lz, J, mass, omega_k) == pytest.approx(closed, rel=1e-13, abs=0.0)


def test_level_pair_without_spin(codata):
    pair = level_pair(0.0, 3.0, 0.2, codata)
    assert pair.E_plus == pair.E_minus == -codata.hbar * 0.2
    assert pair.delta_E == 0.0
    assert pair.omega_plus == pair.omega_minus == 0.2


def test_level_pair_unit_algebra(unit):
    pair = level_pair(1.0, 1.0, 1.0, unit)
    assert (pair.E_plus, pair.E_minus, pair.omega_plus, pair.omega_minus) == (0.0, -2.0, 0.0, 2.0)
    assert pair.delta_E == 2.0


def test_earth_level_splitting(earth, codata):
    J = derive_body(earth).spin_J
    omega_k = keplerian_frequency(EARTH_MASS, LEO_RADIUS)
    assert omega_k == pytest.approx(EARTH_OMEGA_K_AT_LEO, rel=1e-11)
    assert level_pair(J, EARTH_MASS, omega_k, codata).delta_E == pytest.approx(EARTH_DELTA_E_AT_LEO, rel=1e-11)


@settings(max_examples=200)
@given(
    J=st.floats(min_value=0.0, max_value=1e35),
    mass=st.floats(min_value=1e20, max_value=1e31),
    omega_k=st.floats(min_value=1e-6, max_value=1e-1),
)
def test_level_pair_invariants(J, mass, omega_k):
    hbar, c = CODATA2018.hbar, CODATA2018.c
    pair = level_pair(J, mass, omega_k)
    split = omega_k**2 * J / (mass * c**2)
    assert pair.E_plus + pair.E_minus == pytest.approx(-2 * hbar * omega_k, rel=1e-14)
    assert pair.delta_E == pytest.approx(2 * hbar * split, rel=1e-14, abs=0.0)
    assert pair.omega_plus == omega_k - split
    assert pair.omega_minus == omega_k + split


def test_periods_without_spin(codata):
    report = gem_clock_effect(0.0, 5.0, 0.1, codata)
    assert report.T_plus == report.T_minus == pytest.approx(2 * math.pi / 0.1)
    assert report.delta_T == 0.0
    assert report.method is Method.GEM


@settings(max_examples=200)
@given(bodies, st.floats(min_value=1.0001, max_value=1000.0))
def test_expanded_delta_t_is_exact(body, scale):
    r = body.radius * scale
    J = derive_body(body).spin_J
    omega_k = keplerian_frequency(body.mass, r)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", FirstOrderRegimeWarning)
        try:
            report = gem_clock_effect(J, body.mass, omega_k)
        except RegimeError:
            return
    assert report.delta_T == pytest.approx(4 * math.pi * J / (body.mass * CODATA2018.c**2), rel=1e-12, abs=0.0)


def _unexpanded_discrepancy(epsilon):
    # fixed body (J = M = c = 1), epsilon swept through omega_k as a radius sweep would
    report = gem_clock_effect(1.0, 1.0, epsilon, UNIT_CONSTANTS)
    return abs(report.unexpanded_delta_T - report.delta_T)


@pytest.mark.parametrize("epsilon", [1e-2, 1e-3, 1e-4])
def test_truncation_error_is_quadratic(epsilon):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", FirstOrderRegimeWarning)
        ratio = _unexpanded_discrepancy(epsilon) / _unexpanded_discrepancy(epsilon / 2)
    assert 3.5 <= ratio <= 4.5


def test_delta_t_independent_of_radius(earth, codata):
    J = derive_body(earth).spin_J
    values = [
        gem_clock_effect(J, EARTH_MASS, keplerian_frequency(EARTH_MASS, r), codata).delta_T
        for r in np.logspace(np.log10(7e6), np.log10(7e9), 13)
    ]
    np.testing.assert_allclose(values, values[0], rtol=1e-12, atol=0.0)
    assert values[0] == pytest.approx(EARTH_DELTA_T, rel=1e-11)


def test_regime_warning_and_error(unit):
    with pytest.warns(FirstOrderRegimeWarning):
        gem_clock_effect(0.05, 1.0, 1.0, unit)
    with pytest.raises(RegimeError):
        gem_clock_effect(1.0, 1.0, 1.0, unit)
    pair = level_pair(2.0, 1.0, 1.0, unit)
    with pytest.raises(RegimeError):
        periods_first_order(pair, 2.0, 1.0, 1.0, unit)


def test_clock_effect_gem(earth):
    assert clock_effect_gem(0.0, 1.0) == 0.0
    assert clock_effect_gem(derive_body(earth).spin_J, EARTH_MASS) == pytest.approx(EARTH_DELTA_T, rel=1e-11)
