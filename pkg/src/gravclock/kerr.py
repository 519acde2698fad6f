"""Classical clock effect from the co- and counter-rotating Kerr frequencies.

For a circular equatorial orbit with Keplerian frequency ``omega_k`` around a
source of spin parameter ``a`` (seconds)::

    1/w_plus  = a + 1/omega_k        (prograde)
    1/w_minus = a - 1/omega_k        (retrograde, negative while a*omega_k < 1)

Periods use the magnitude of the frequency, so both are positive and
``T_plus - T_minus = 4 pi a`` for every ``omega_k``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .errors import DegenerateOrbitError, InvalidInputError, RegimeError

TWO_PI = 2.0 * math.pi
DEGENERACY_TOLERANCE = 1e-12


class OrbitSense(enum.Enum):
    PROGRADE = "prograde"
    RETROGRADE = "retrograde"

    @property
    def sign(self) -> int:
        return 1 if self is OrbitSense.PROGRADE else -1


class Method(str, enum.Enum):
    KERR = "kerr"
    SEMICLASSICAL = "semiclassical"
    GEM = "gem"
    ORACLE = "oracle"


@dataclass(frozen=True)
class KerrFrequencies:
    w_plus: float
    w_minus: float
    a: float
    omega_k: float


@dataclass(frozen=True)
class ClockEffectReport:
    """Prograde/retrograde periods and their difference.

    ``delta_T`` is the difference of the exact periods; routes that know the
    periods as sums of terms evaluate it without cancellation, so it agrees
    with ``T_plus - T_minus`` to within the rounding of the two periods.
    ``unexpanded`` holds ``(2 pi/omega_plus, 2 pi/omega_minus)`` for the GEM
    route and ``energy_drift`` the integrator diagnostic for the oracle.
    """

    T_plus: float
    T_minus: float
    delta_T: float
    method: Method
    unexpanded: Optional[tuple[float, float]] = None
    energy_drift: Optional[float] = None

    def __post_init__(self):
        if not (self.T_plus > 0.0 and self.T_minus > 0.0):
            raise RegimeError(
                f"periods must be positive, got T_plus={self.T_plus!r}, T_minus={self.T_minus!r}"
            )

    @property
    def unexpanded_delta_T(self) -> Optional[float]:
        if self.unexpanded is None:
            return None
        return self.unexpanded[0] - self.unexpanded[1]


def check_orbit_parameters(a: float, omega_k: float) -> None:
    """Validate ``(a, omega_k)`` for the Kerr and semiclassical routes."""
    if not (math.isfinite(a) and math.isfinite(omega_k)):
        raise InvalidInputError(f"a and omega_k must be finite, got a={a!r}, omega_k={omega_k!r}")
    if omega_k <= 0.0:
        raise InvalidInputError(f"omega_k must be positive, got {omega_k!r}")
    if a < 0.0:
        raise InvalidInputError(f"a must be non-negative, got {a!r}")
    product = a * omega_k
    if abs(1.0 - product) < DEGENERACY_TOLERANCE:
        raise DegenerateOrbitError(
            f"a*omega_k = {product!r} is 1 to within {DEGENERACY_TOLERANCE}; "
            "the counter-rotating frequency diverges"
        )
    if product > 1.0:
        raise RegimeError(
            f"a*omega_k = {product!r} > 1: no counter-rotating circular orbit in this parametrization"
        )


def kerr_frequencies(a: float, omega_k: float) -> KerrFrequencies:
    a = float(a)
    omega_k = float(omega_k)
    check_orbit_parameters(a, omega_k)
    inverse_k = 1.0 / omega_k
    return KerrFrequencies(
        w_plus=1.0 / (a + inverse_k),
        w_minus=1.0 / (a - inverse_k),
        a=a,
        omega_k=omega_k,
    )


def periods_from_frequencies(f: KerrFrequencies) -> ClockEffectReport:
    T_plus = TWO_PI / abs(f.w_plus)
    T_minus = TWO_PI / abs(f.w_minus)
    # |1/w_plus| = a + 1/omega_k and |1/w_minus| = 1/omega_k - a; summing the
    # terms exactly keeps delta_T accurate even when a*omega_k is tiny.
    inverse_k = 1.0 / f.omega_k
    delta_T = TWO_PI * math.fsum([f.a, inverse_k, -inverse_k, f.a])
    return ClockEffectReport(T_plus=T_plus, T_minus=T_minus, delta_T=delta_T, method=Method.KERR)


def kerr_clock_effect(a: float, omega_k: float) -> ClockEffectReport:
    return periods_from_frequencies(kerr_frequencies(a, omega_k))


def clock_effect_exact(a: float) -> float:
    """Closed-form clock effect ``4 pi a``."""
    return 4.0 * math.pi * a
