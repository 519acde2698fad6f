"""Exception types raised across the package.

Every error derives from ``ValueError`` so callers that only care about bad
input can catch a single builtin.
"""


class GravClockError(ValueError):
    """Base class for all domain errors."""


class InvalidInputError(GravClockError):
    """A parameter is non-finite, non-positive or otherwise out of range."""


class DegenerateOrbitError(GravClockError):
    """a * omega_k is numerically 1 and the counter-rotating frequency diverges."""


class RegimeError(GravClockError):
    """The inputs fall outside the regime where the model is defined."""


class NoClosureError(GravClockError):
    """A zero-energy rotor never closes on itself."""


class InsideSourceError(GravClockError):
    """The test particle sits on or inside the central body."""


class StepBudgetError(GravClockError):
    """The integrator hit ``max_steps`` before finishing."""


class NeedsMoreDataError(GravClockError):
    """The trajectory does not cover a full revolution."""


class ScenarioError(GravClockError):
    """A scenario file failed to parse or validate.

    ``line`` is the 1-based line number when the problem is tied to one line.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
