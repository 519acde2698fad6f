"""Independent numerical check of the clock effect.

A test particle moves in the equatorial plane under Newtonian gravity plus a
velocity-dependent gravitomagnetic force

    a = -G M r_hat / r^2 + v x (B_g z_hat),    B_g(r) = 2 G J / (c^2 r^3).

For circular orbits the radial balance reads ``w^2 + B_g w - omega_k^2 = 0``
with signed angular rate ``w``, so the prograde orbit slows to
``omega_k - B_g/2`` at first order and the retrograde one speeds up by the
same amount.  ``v x z_hat`` lies in the plane and does no work, so the
Newtonian specific energy is an exact invariant of the flow.

Periods are measured from the continuously accumulated azimuth; crossings of
``2 pi k`` are located on the DOP853 dense output with Brent's method.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Optional, TextIO

import numpy as np
from scipy.integrate import DOP853
from scipy.interpolate import CubicHermiteSpline
from scipy.optimize import brentq

from .constants import CODATA2018, CentralBody, PhysicalConstants, derive_body, keplerian_frequency
from .errors import InsideSourceError, InvalidInputError, NeedsMoreDataError, RegimeError, StepBudgetError
from .kerr import TWO_PI, ClockEffectReport, Method, OrbitSense

# Keeps each step's azimuth increment well below pi so atan2 never aliases.
_MAX_STEP_ANGLE = 0.5


class UnresolvedClockEffectWarning(UserWarning):
    """The clock effect is below what the integrator tolerance can resolve."""


@dataclass(frozen=True)
class ParticleState:
    position: np.ndarray
    velocity: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        position = np.asarray(self.position, dtype=float).reshape(2)
        velocity = np.asarray(self.velocity, dtype=float).reshape(2)
        if not (np.all(np.isfinite(position)) and np.all(np.isfinite(velocity))):
            raise InvalidInputError("particle state must be finite")
        if not np.any(position):
            raise InvalidInputError("particle cannot sit at the origin")
        object.__setattr__(self, "position", position)
        object.__setattr__(self, "velocity", velocity)
        object.__setattr__(self, "time", float(self.time))


@dataclass(frozen=True)
class IntegratorConfig:
    relative_tolerance: float = 1e-12
    max_steps: int = 1_000_000
    crossing_tolerance: float = 1e-12

    def __post_init__(self):
        if not (0.0 < self.relative_tolerance <= 1e-6):
            raise InvalidInputError(
                f"relative_tolerance must lie in (0, 1e-6], got {self.relative_tolerance!r}"
            )
        if int(self.max_steps) <= 0:
            raise InvalidInputError(f"max_steps must be positive, got {self.max_steps!r}")
        if not (self.crossing_tolerance > 0.0):
            raise InvalidInputError(
                f"crossing_tolerance must be positive, got {self.crossing_tolerance!r}"
            )


@dataclass(frozen=True)
class PeriodMeasurement:
    T: float
    revolutions_used: int
    energy_drift: float


@dataclass
class Trajectory:
    """Accepted integrator steps plus the refined revolution crossings.

    ``azimuth`` is unwrapped (continuous) and signed by the orbit sense.
    ``crossings[k]`` is the time at which ``|azimuth - azimuth[0]|`` reached
    ``2 pi (k + 1)``, located on the dense output.
    """

    t: np.ndarray
    position: np.ndarray
    velocity: np.ndarray
    azimuth: np.ndarray
    mu: float
    crossings: list[float] = field(default_factory=list)
    steps: int = 0

    def specific_energy(self) -> np.ndarray:
        r = np.hypot(self.position[:, 0], self.position[:, 1])
        return 0.5 * np.sum(self.velocity**2, axis=1) - self.mu / r


def _field_coefficient(body: CentralBody, consts: PhysicalConstants) -> float:
    # B_g(r) = coefficient / r^3
    J = derive_body(body, consts).spin_J
    return 2.0 * consts.G * J / consts.c**2


def _rhs_factory(body: CentralBody, consts: PhysicalConstants):
    mu = consts.G * body.mass
    coefficient = _field_coefficient(body, consts)
    radius = body.radius

    def rhs(t, y):
        x, yy, vx, vy = y
        r2 = x * x + yy * yy
        r = math.sqrt(r2)
        if r <= radius:
            raise InsideSourceError(f"particle at r={r!r} is inside the source (R={radius!r})")
        r3 = r2 * r
        g = -mu / r3
        b = coefficient / r3
        # v x (b z_hat) = (b vy, -b vx)
        return np.array([vx, vy, g * x + b * vy, g * yy - b * vx])

    return rhs


def acceleration(state: ParticleState, body: CentralBody, consts: PhysicalConstants = CODATA2018) -> np.ndarray:
    y = np.concatenate([state.position, state.velocity])
    return _rhs_factory(body, consts)(state.time, y)[2:]


def circular_rate(r: float, sense: OrbitSense, body: CentralBody, consts: PhysicalConstants = CODATA2018) -> float:
    """Signed angular rate of the exact circular orbit at radius ``r``."""
    if not (math.isfinite(r) and r > body.radius):
        raise InsideSourceError(f"orbit radius {r!r} must exceed the body radius {body.radius!r}")
    omega_k = keplerian_frequency(body.mass, r, consts)
    B = _field_coefficient(body, consts) / r**3
    discriminant = B * B + 4.0 * omega_k * omega_k
    if not (math.isfinite(discriminant) and discriminant > 0.0):
        raise RegimeError(f"no circular orbit at r={r!r}")
    # Stable roots of w^2 + B w - omega_k^2 = 0.
    q = -0.5 * (B + math.copysign(math.sqrt(discriminant), B))
    roots = (q, -omega_k * omega_k / q)
    for root in roots:
        if root * sense.sign > 0.0:
            return root
    raise RegimeError(f"no {sense.value} circular orbit at r={r!r}")


def circular_launch(
    r: float, sense: OrbitSense, body: CentralBody, consts: PhysicalConstants = CODATA2018
) -> ParticleState:
    w = circular_rate(r, sense, body, consts)
    return ParticleState(position=np.array([r, 0.0]), velocity=np.array([0.0, w * r]), time=0.0)


def _step_angle(p0, p1) -> float:
    return math.atan2(p0[0] * p1[1] - p0[1] * p1[0], p0[0] * p1[0] + p0[1] * p1[1])


def integrate_orbit(
    state: ParticleState,
    body: CentralBody,
    config: IntegratorConfig = IntegratorConfig(),
    consts: PhysicalConstants = CODATA2018,
    *,
    duration: Optional[float] = None,
    revolutions: Optional[int] = None,
) -> Trajectory:
    """Integrate for a fixed ``duration`` or until ``revolutions`` full turns.

    Exactly one of ``duration`` and ``revolutions`` must be given.  With
    ``revolutions`` the last sample is the refined crossing itself.
    """
    if (duration is None) == (revolutions is None):
        raise InvalidInputError("give exactly one of duration or revolutions")
    if duration is not None and not (math.isfinite(duration) and duration > 0.0):
        raise InvalidInputError(f"duration must be positive, got {duration!r}")
    if revolutions is not None and int(revolutions) < 1:
        raise InvalidInputError(f"revolutions must be >= 1, got {revolutions!r}")

    rhs = _rhs_factory(body, consts)
    y0 = np.concatenate([state.position, state.velocity])
    r0 = float(np.hypot(*state.position))
    if r0 <= body.radius:
        raise InsideSourceError(f"particle at r={r0!r} is inside the source (R={body.radius!r})")
    rate = abs(state.position[0] * state.velocity[1] - state.position[1] * state.velocity[0]) / r0**2
    rate = max(rate, keplerian_frequency(body.mass, r0, consts))
    t_bound = state.time + duration if duration is not None else math.inf

    solver = DOP853(
        rhs,
        state.time,
        y0,
        t_bound,
        rtol=config.relative_tolerance,
        atol=config.relative_tolerance * np.array([r0, r0, r0 * rate, r0 * rate]),
        max_step=_MAX_STEP_ANGLE / rate,
    )

    times = [state.time]
    states = [y0.copy()]
    azimuth = [0.0]
    crossings: list[float] = []
    phi = 0.0
    steps = 0
    while solver.status == "running":
        if steps >= config.max_steps:
            raise StepBudgetError(f"exceeded max_steps={config.max_steps}")
        t_prev = solver.t
        p_prev = solver.y[:2].copy()
        message = solver.step()
        if solver.status == "failed":
            raise RegimeError(f"integrator failed: {message}")
        steps += 1
        dphi = _step_angle(p_prev, solver.y[:2])
        next_turn = TWO_PI * (len(crossings) + 1)
        if abs(phi + dphi) >= next_turn:
            dense = solver.dense_output()
            base = phi
            while abs(base + dphi) >= TWO_PI * (len(crossings) + 1):
                target = math.copysign(TWO_PI * (len(crossings) + 1), dphi)

                def residual(t, target=target):
                    return base + _step_angle(p_prev, dense(t)[:2]) - target

                t_cross = brentq(
                    residual, t_prev, solver.t, xtol=config.crossing_tolerance, rtol=4 * np.finfo(float).eps
                )
                crossings.append(t_cross)
                if revolutions is not None and len(crossings) == revolutions:
                    y_cross = dense(t_cross)
                    times.append(t_cross)
                    states.append(y_cross)
                    azimuth.append(target)
                    return _pack(times, states, azimuth, consts.G * body.mass, crossings, steps)
        phi += dphi
        times.append(solver.t)
        states.append(solver.y.copy())
        azimuth.append(phi)
    return _pack(times, states, azimuth, consts.G * body.mass, crossings, steps)


def _pack(times, states, azimuth, mu, crossings, steps) -> Trajectory:
    states = np.asarray(states)
    return Trajectory(
        t=np.asarray(times),
        position=states[:, :2],
        velocity=states[:, 2:],
        azimuth=np.asarray(azimuth),
        mu=mu,
        crossings=list(crossings),
        steps=steps,
    )


def _crossings_from_samples(traj: Trajectory, tolerance: float) -> list[float]:
    # Fallback for trajectories without recorded crossings: Hermite interpolation
    # of the unwrapped azimuth, whose derivative is (r x v)/r^2.
    pos, vel = traj.position, traj.velocity
    rate = (pos[:, 0] * vel[:, 1] - pos[:, 1] * vel[:, 0]) / np.sum(pos**2, axis=1)
    spline = CubicHermiteSpline(traj.t, traj.azimuth - traj.azimuth[0], rate)
    swept = traj.azimuth - traj.azimuth[0]
    turns = int(np.floor(np.max(np.abs(swept)) / TWO_PI + 1e-12))
    direction = math.copysign(1.0, swept[-1])
    out = []
    for k in range(1, turns + 1):
        target = direction * TWO_PI * k
        idx = int(np.argmax(np.abs(swept) >= TWO_PI * k * (1 - 1e-15)))
        lo = traj.t[max(idx - 1, 0)]
        hi = traj.t[idx]
        if lo == hi:
            out.append(float(hi))
            continue
        out.append(brentq(lambda t: float(spline(t)) - target, lo, hi, xtol=tolerance, rtol=4 * np.finfo(float).eps))
    return out


def azimuthal_period(traj: Trajectory, config: IntegratorConfig = IntegratorConfig()) -> PeriodMeasurement:
    """Mean time per full turn of the azimuth, over all whole turns available."""
    crossings = traj.crossings or _crossings_from_samples(traj, config.crossing_tolerance)
    if not crossings:
        raise NeedsMoreDataError("trajectory does not complete one revolution")
    n = len(crossings)
    T = (crossings[-1] - traj.t[0]) / n
    energy = traj.specific_energy()
    drift = float(np.max(np.abs(energy - energy[0])) / abs(energy[0]))
    return PeriodMeasurement(T=T, revolutions_used=n, energy_drift=drift)


def measure_clock_effect(
    body: CentralBody,
    r: float,
    config: IntegratorConfig = IntegratorConfig(),
    consts: PhysicalConstants = CODATA2018,
    revolutions: int = 2,
) -> ClockEffectReport:
    """Integrate both senses at radius ``r`` and difference the periods."""
    derived = derive_body(body, consts)
    omega_k = keplerian_frequency(body.mass, r, consts)
    epsilon = abs(derived.spin_J) * omega_k / (body.mass * consts.c**2)
    if 0.0 < 2.0 * epsilon < 1e3 * config.relative_tolerance:
        warnings.warn(
            f"clock effect (relative size {2 * epsilon:.3g}) is near the integrator "
            f"tolerance {config.relative_tolerance:g}; the measured delta_T is noise-dominated",
            UnresolvedClockEffectWarning,
            stacklevel=2,
        )
    measured = {}
    for sense in OrbitSense:
        traj = integrate_orbit(
            circular_launch(r, sense, body, consts), body, config, consts, revolutions=revolutions
        )
        measured[sense] = azimuthal_period(traj, config)
    T_plus = measured[OrbitSense.PROGRADE].T
    T_minus = measured[OrbitSense.RETROGRADE].T
    return ClockEffectReport(
        T_plus=T_plus,
        T_minus=T_minus,
        delta_T=T_plus - T_minus,
        method=Method.ORACLE,
        energy_drift=max(m.energy_drift for m in measured.values()),
    )


def write_trajectory(traj: Trajectory, stream: TextIO) -> None:
    """Dump ``time x y vx vy`` columns, one sample per line."""
    stream.write("# time x y vx vy\n")
    for t, p, v in zip(traj.t, traj.position, traj.velocity):
        stream.write(f"{t:.17g} {p[0]:.17g} {p[1]:.17g} {v[0]:.17g} {v[1]:.17g}\n")
