"""Exception hierarchy shared by the generators, the harness and the CLI."""


class DegreeGraphError(Exception):
    """Base class. ``code`` is the machine-readable tag printed by the CLI."""

    code = "error"


class InvalidParameterError(DegreeGraphError, ValueError):
    code = "invalid-parameter"


class InvalidInputError(DegreeGraphError, ValueError):
    code = "invalid-input"


class InvalidRangeError(DegreeGraphError, ValueError):
    code = "invalid-range"


class RecipeInfeasibleError(DegreeGraphError, ValueError):
    code = "recipe-infeasible"


class NonConvergenceError(DegreeGraphError, RuntimeError):
    code = "non-convergence"


class TooManyAttemptsError(DegreeGraphError, RuntimeError):
    code = "too-many-attempts"

    def __init__(self, attempts, message=None):
        self.attempts = attempts
        super().__init__(message or f"no simple graph after {attempts} attempts")
