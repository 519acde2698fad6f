"""Gravitomagnetic level splitting and the resulting clock effect.

A spinning ball of mass M, radius R and spin rate omega produces on its
equatorial plane the gravitomagnetic field

    B = (4/5) G R^2 M omega / (c^2 r^3) = 2 J omega_k^2 / (M c^2),

with J = (2/5) M R^2 omega and omega_k the Keplerian frequency at r.  An
orbiting spin-zero mass carries the moment mu = -L/2, so the L_z = +-hbar
levels shift by -mu.B = +-hbar omega_k^2 J / (M c^2) around the Keplerian
level -hbar omega_k.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .constants import CODATA2018, CentralBody, PhysicalConstants, spin_parameter
from .errors import InvalidInputError, RegimeError
from .kerr import TWO_PI, ClockEffectReport, Method, clock_effect_exact

FIRST_ORDER_WARN_EPSILON = 1e-2


class FirstOrderRegimeWarning(UserWarning):
    """epsilon = J omega_k / (M c^2) is too large for the expanded periods."""


@dataclass(frozen=True)
class GemFieldSample:
    magnitude: float
    direction: int
    r: float


@dataclass(frozen=True)
class LevelPair:
    E_plus: float
    E_minus: float
    delta_E: float
    omega_plus: float
    omega_minus: float


def _check_mass(mass):
    if not (math.isfinite(mass) and mass > 0.0):
        raise InvalidInputError(f"mass must be positive and finite, got {mass!r}")


def _check_lz(Lz_sign):
    if Lz_sign not in (1, -1):
        raise InvalidInputError(f"Lz_sign must be +1 or -1, got {Lz_sign!r}")


def equatorial_field(body: CentralBody, r: float, consts: PhysicalConstants = CODATA2018) -> GemFieldSample:
    if not (math.isfinite(r) and r > 0.0):
        raise InvalidInputError(f"field radius must be positive, got {r!r}")
    magnitude = (
        0.8 * consts.G * body.radius**2 * body.mass * abs(body.spin_omega) / (consts.c**2 * r**3)
    )
    direction = 1 if body.spin_omega >= 0.0 else -1
    return GemFieldSample(magnitude=magnitude, direction=direction, r=r)


def rewritten_field(J: float, mass: float, omega_k: float, consts: PhysicalConstants = CODATA2018) -> float:
    """Signed z-component ``2 J omega_k^2 / (M c^2)`` of the equatorial field."""
    _check_mass(mass)
    return 2.0 * J * omega_k**2 / (mass * consts.c**2)


def gravitomagnetic_moment(Lz_sign: int, consts: PhysicalConstants = CODATA2018) -> float:
    """z-component of mu = -L/2 for L_z = Lz_sign * hbar."""
    _check_lz(Lz_sign)
    return -0.5 * Lz_sign * consts.hbar


def potential_energy(
    Lz_sign: int, J: float, mass: float, omega_k: float, consts: PhysicalConstants = CODATA2018
) -> float:
    """Coupling energy -mu.B, both vectors along z."""
    mu = gravitomagnetic_moment(Lz_sign, consts)
    B = rewritten_field(J, mass, omega_k, consts)
    return -mu * B


def first_order_epsilon(J, mass, omega_k, consts=CODATA2018):
    _check_mass(mass)
    return J * omega_k / (mass * consts.c**2)


def level_pair(J: float, mass: float, omega_k: float, consts: PhysicalConstants = CODATA2018) -> LevelPair:
    _check_mass(mass)
    if not (math.isfinite(omega_k) and omega_k > 0.0):
        raise InvalidInputError(f"omega_k must be positive, got {omega_k!r}")
    keplerian = -consts.hbar * omega_k
    shift = potential_energy(1, J, mass, omega_k, consts)
    E_plus = keplerian + shift
    E_minus = keplerian + potential_energy(-1, J, mass, omega_k, consts)
    split = omega_k**2 * J / (mass * consts.c**2)
    return LevelPair(
        E_plus=E_plus,
        E_minus=E_minus,
        delta_E=2.0 * shift,
        omega_plus=omega_k - split,
        omega_minus=omega_k + split,
    )


def periods_first_order(
    pair: LevelPair, J: float, mass: float, omega_k: float, consts: PhysicalConstants = CODATA2018
) -> ClockEffectReport:
    """Periods expanded to first order in epsilon = J omega_k / (M c^2).

    ``T_plus/T_minus = 2 pi/omega_k +- 2 pi J/(M c^2)``; the exact
    ``2 pi/omega_plus`` and ``2 pi/omega_minus`` ride along in ``unexpanded``.
    """
    if pair.omega_plus <= 0.0 or pair.omega_minus <= 0.0:
        raise RegimeError(
            f"level frequencies must be positive, got omega_plus={pair.omega_plus!r}, "
            f"omega_minus={pair.omega_minus!r}"
        )
    epsilon = first_order_epsilon(J, mass, omega_k, consts)
    if abs(epsilon) > FIRST_ORDER_WARN_EPSILON:
        warnings.warn(
            f"epsilon = {epsilon:.3g} exceeds {FIRST_ORDER_WARN_EPSILON}; first-order periods are inaccurate",
            FirstOrderRegimeWarning,
            stacklevel=2,
        )
    kepler_period = TWO_PI / omega_k
    shift = TWO_PI * J / (mass * consts.c**2)
    return ClockEffectReport(
        T_plus=kepler_period + shift,
        T_minus=kepler_period - shift,
        delta_T=math.fsum([kepler_period, shift, -kepler_period, shift]),
        method=Method.GEM,
        unexpanded=(TWO_PI / pair.omega_plus, TWO_PI / pair.omega_minus),
    )


def gem_clock_effect(J, mass, omega_k, consts=CODATA2018) -> ClockEffectReport:
    return periods_first_order(level_pair(J, mass, omega_k, consts), J, mass, omega_k, consts)


def clock_effect_gem(J: float, mass: float, consts: PhysicalConstants = CODATA2018) -> float:
    """``4 pi J / (M c^2)``, identical to the Kerr result with ``a = J/(M c^2)``."""
    _check_mass(mass)
    return clock_effect_exact(spin_parameter(J, mass, consts))
