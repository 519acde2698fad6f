"""Physical constants and the uniform-sphere model of the central body.

All quantities are SI.  The Kerr spin parameter ``a = J / (M c^2)`` therefore
carries units of seconds.

CODATA 2018 defaults (10 significant figures)::

    G    = 6.674300000e-11  m^3 kg^-1 s^-2
    c    = 2.997924580e+08  m s^-1        (exact)
    hbar = 1.054571817e-34  J s           (exact)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidInputError

UNIFORM_SPHERE_FACTOR = 0.4


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise InvalidInputError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class PhysicalConstants:
    G: float = 6.67430e-11
    c: float = 299792458.0
    hbar: float = 1.054571817e-34

    def __post_init__(self):
        for name in ("G", "c", "hbar"):
            value = _require_finite(name, getattr(self, name))
            if value <= 0.0:
                raise InvalidInputError(f"{name} must be positive, got {value!r}")


CODATA2018 = PhysicalConstants()
UNIT_CONSTANTS = PhysicalConstants(G=1.0, c=1.0, hbar=1.0)


@dataclass(frozen=True)
class CentralBody:
    """A rigidly spinning ball; ``spin_omega`` is signed about +z."""

    mass: float
    radius: float
    spin_omega: float = 0.0
    inertia_factor: float = UNIFORM_SPHERE_FACTOR

    def __post_init__(self):
        mass = _require_finite("mass", self.mass)
        if mass <= 0.0:
            raise InvalidInputError(f"mass must be positive, got {mass!r}")
        radius = _require_finite("radius", self.radius)
        if radius < 0.0:
            raise InvalidInputError(f"radius must be non-negative, got {radius!r}")
        _require_finite("spin_omega", self.spin_omega)
        factor = _require_finite("inertia_factor", self.inertia_factor)
        if factor <= 0.0:
            raise InvalidInputError(f"inertia_factor must be positive, got {factor!r}")


@dataclass(frozen=True)
class DerivedBody:
    moment_of_inertia: float
    spin_J: float
    spin_parameter_a: float


def derive_body(body: CentralBody, consts: PhysicalConstants = CODATA2018) -> DerivedBody:
    """Moment of inertia, spin angular momentum and Kerr parameter ``a`` (seconds)."""
    inertia = body.inertia_factor * body.mass * body.radius**2
    spin_J = inertia * body.spin_omega
    return DerivedBody(
        moment_of_inertia=inertia,
        spin_J=spin_J,
        spin_parameter_a=spin_parameter(spin_J, body.mass, consts),
    )


def spin_parameter(spin_J: float, mass: float, consts: PhysicalConstants = CODATA2018) -> float:
    # Shared by derive_body and the GEM clock effect so both give identical bits.
    return spin_J / (mass * consts.c**2)


def keplerian_frequency(mass: float, r: float, consts: PhysicalConstants = CODATA2018) -> float:
    """Newtonian circular-orbit angular frequency sqrt(G M / r^3)."""
    mass = _require_finite("mass", mass)
    r = _require_finite("r", r)
    if mass <= 0.0:
        raise InvalidInputError(f"mass must be positive, got {mass!r}")
    if r <= 0.0:
        raise InvalidInputError(f"orbital radius must be positive, got {r!r}")
    return math.sqrt(consts.G * mass / r**3)
