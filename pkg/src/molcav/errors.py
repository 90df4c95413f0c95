"""Exception types shared across the package.

The CLI maps these onto distinct process exit codes, so commands can be
scripted against reliably.
"""


class MolcavError(Exception):
    """Base class for package-specific failures."""


class ScenarioError(MolcavError):
    """Scenario file could not be parsed or validated.

    Carries the complete list of problems, not just the first one.
    """

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class PreconditionError(MolcavError):
    """An operation was invoked outside its documented preconditions."""


class NumericalError(MolcavError):
    """A numerical routine failed to converge or lost accuracy."""


class StiffnessError(NumericalError):
    """Adaptive step size underflowed; the problem is too stiff as posed."""

    def __init__(self, t, step, message=""):
        self.t = t
        self.step = step
        super().__init__(
            f"step size underflow at t={t:.6g} (h={step:.3g}){': ' + message if message else ''}"
        )


class CalibrationError(MolcavError):
    """Pulse calibration found no root in the search box.

    ``residual_map`` holds the (delta_1, T, residual) samples that were
    examined, for diagnosis.
    """

    def __init__(self, message, residual_map=None):
        self.residual_map = residual_map
        super().__init__(message)
