"""Gravitomagnetic clock effect: Kerr, semiclassical and GEM routes plus a numerical oracle."""

from .constants import (
    CODATA2018,
    UNIT_CONSTANTS,
    CentralBody,
    DerivedBody,
    PhysicalConstants,
    derive_body,
    keplerian_frequency,
)
from .errors import (
    DegenerateOrbitError,
    GravClockError,
    InsideSourceError,
    InvalidInputError,
    NeedsMoreDataError,
    NoClosureError,
    RegimeError,
    ScenarioError,
    StepBudgetError,
)
from .gem import (
    GemFieldSample,
    LevelPair,
    clock_effect_gem,
    equatorial_field,
    gem_clock_effect,
    gravitomagnetic_moment,
    level_pair,
    periods_first_order,
    potential_energy,
    rewritten_field,
)
from .kerr import (
    ClockEffectReport,
    KerrFrequencies,
    Method,
    OrbitSense,
    clock_effect_exact,
    kerr_clock_effect,
    kerr_frequencies,
    periods_from_frequencies,
)
from .oracle import (
    IntegratorConfig,
    ParticleState,
    PeriodMeasurement,
    Trajectory,
    acceleration,
    azimuthal_period,
    circular_launch,
    integrate_orbit,
    measure_clock_effect,
)
from .scenario import ReportRow, Scenario, emit_report, load_scenario, run_scenario
from .semiclassical import (
    RotorState,
    SemiclassicalLevel,
    bound_state_adjustment,
    closure_period,
    evaluate_state,
    level_energies,
    quantum_clock_effect,
)

__version__ = "0.1.0"
