"""Semiclassical levels and the quantum clock effect.

Dividing the Kerr frequencies by hbar gives two levels,
``1/E = a/hbar + Lz/(hbar omega_k)`` with ``Lz = +1`` (prograde) or ``-1``
(retrograde), in units of hbar.  Each level is carried by a planar rotor

    psi(t, phi) = A exp(i m phi) exp(-i E t / hbar),

and the period is the smallest ``T > 0`` for which ``psi(t + T, phi + 2 pi)``
equals ``psi(t, phi)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .constants import CODATA2018, PhysicalConstants
from .errors import InvalidInputError, NoClosureError
from .kerr import TWO_PI, ClockEffectReport, Method, check_orbit_parameters

_ALLOWED_LZ = (1, -1)


def _check_unit_sign(name: str, value: int) -> int:
    if value not in _ALLOWED_LZ:
        raise InvalidInputError(f"{name} must be +1 or -1, got {value!r}")
    return int(value)


@dataclass(frozen=True)
class SemiclassicalLevel:
    energy: float
    Lz: int

    def __post_init__(self):
        _check_unit_sign("Lz", self.Lz)


@dataclass(frozen=True)
class RotorState:
    energy: float
    m: int
    amplitude: complex = 1.0 + 0.0j

    def __post_init__(self):
        _check_unit_sign("m", self.m)
        if abs(self.amplitude) == 0.0:
            raise InvalidInputError("rotor amplitude must be non-zero")


def _inverse_energy_terms(a, omega_k, Lz, consts):
    # 1/E = a/hbar + Lz/(hbar omega_k), kept as two separate terms
    return (a / consts.hbar, Lz * (1.0 / omega_k) / consts.hbar)


def level_energies(a: float, omega_k: float, consts: PhysicalConstants = CODATA2018):
    """Return ``(E_plus, E_minus)`` in joules."""
    a = float(a)
    omega_k = float(omega_k)
    check_orbit_parameters(a, omega_k)
    inverse_k = 1.0 / omega_k
    return consts.hbar / (a + inverse_k), consts.hbar / (a - inverse_k)


def semiclassical_levels(a, omega_k, consts=CODATA2018):
    E_plus, E_minus = level_energies(a, omega_k, consts)
    return SemiclassicalLevel(E_plus, 1), SemiclassicalLevel(E_minus, -1)


def evaluate_state(state: RotorState, t, phi, consts: PhysicalConstants = CODATA2018):
    """Evaluate the rotor wavefunction; ``t`` and ``phi`` may be arrays."""
    phase = state.m * np.asarray(phi) - state.energy * np.asarray(t) / consts.hbar
    return state.amplitude * np.exp(1j * phase)


def closure_winding(state: RotorState) -> int:
    """Number of energy-phase turns ``n`` in the shortest closing period.

    Shifting ``phi`` by 2 pi adds the phase ``2 pi m`` and shifting ``t`` by
    ``T`` adds ``-E T / hbar``.  Single-valuedness requires the total to be
    ``2 pi k`` for an integer ``k``, hence ``E T / hbar = 2 pi (m - k)``.
    With ``n = m - k`` every integer is reachable, ``T = 2 pi hbar n / E``, and
    the smallest positive ``T`` takes ``n`` of unit size with the sign of ``E``.
    """
    if state.energy == 0.0 or not math.isfinite(state.energy):
        raise NoClosureError(f"rotor with energy {state.energy!r} has no finite closing period")
    candidates = []
    for k in range(state.m - 2, state.m + 3):
        n = state.m - k
        if n != 0 and n / state.energy > 0.0:
            candidates.append((abs(n), n))
    return min(candidates)[1]


def closure_period(state: RotorState, consts: PhysicalConstants = CODATA2018) -> float:
    n = closure_winding(state)
    return TWO_PI * consts.hbar * n / state.energy


def quantum_clock_effect(
    a: float, omega_k: float, consts: PhysicalConstants = CODATA2018
) -> ClockEffectReport:
    E_plus, E_minus = level_energies(a, omega_k, consts)
    prograde = RotorState(E_plus, 1)
    retrograde = RotorState(E_minus, -1)
    T_plus = closure_period(prograde, consts)
    T_minus = closure_period(retrograde, consts)

    # T = 2 pi hbar n / E = 2 pi hbar n (1/E); expand 1/E into its two terms
    # and sum them exactly so the difference does not cancel catastrophically.
    terms = []
    for state, sign in ((prograde, 1), (retrograde, -1)):
        n = closure_winding(state)
        terms.extend(sign * n * term for term in _inverse_energy_terms(a, omega_k, state.m, consts))
    delta_T = TWO_PI * consts.hbar * math.fsum(terms)
    return ClockEffectReport(
        T_plus=T_plus, T_minus=T_minus, delta_T=delta_T, method=Method.SEMICLASSICAL
    )


def bound_state_adjustment(level: SemiclassicalLevel) -> SemiclassicalLevel:
    """Map a level onto the bound-state sign convention of the GEM levels.

    The prograde level comes out positive and is negated; the retrograde
    level is already bound and is returned unchanged.
    """
    if level.Lz == 1:
        return replace(level, energy=-level.energy)
    return level
