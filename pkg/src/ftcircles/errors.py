"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` used by the CLI for
its one-line ``ERROR:<code>:<detail>`` output.
"""


class FTCirclesError(Exception):
    """Base class for all library errors."""

    code = "error"


class InvalidConfiguration(FTCirclesError, ValueError):
    """A circle configuration violates its invariants."""

    code = "invalid_configuration"


class SceneError(FTCirclesError, ValueError):
    """A scene file is malformed or inconsistent."""

    code = "invalid_scene"


class DegenerateProjection(FTCirclesError):
    """Projection target coincides with the circle center; not unique."""

    code = "degenerate_projection"


class DegenerateAngle(FTCirclesError):
    """An angle endpoint coincides with the apex."""

    code = "degenerate_angle"


class SolutionInsideDisk(FTCirclesError):
    """The minimizer of the center problem lies strictly inside a disk."""

    code = "solution_inside_disk"

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"minimizer lies strictly inside disk {index}")


class NonConvergence(FTCirclesError):
    """Iteration budget exhausted before reaching the tolerance."""

    code = "non_convergence"


class CalledOnAbsorbed(FTCirclesError):
    """Operation requires a floating solution but got an absorbed one."""

    code = "called_on_absorbed"


class AbsorbedWeights(FTCirclesError):
    """Weight triple violates the floating triangle condition."""

    code = "absorbed_weights"


class DegenerateAngles(FTCirclesError):
    """An angle sine is too small for stable weight recovery."""

    code = "degenerate_angles"


class SingularSystem(FTCirclesError):
    """Angle data is inconsistent with any interior equilibrium."""

    code = "singular_system"


class GeometryPreconditionViolated(FTCirclesError):
    """Ray geometry violates the interior/exterior triangle hypotheses."""

    code = "geometry_precondition"


class MissingRatio(FTCirclesError):
    """A required sub-triangle weight ratio was not supplied."""

    code = "missing_ratio"


class ShiftedConfigInvalid(FTCirclesError):
    """A radially shifted configuration violates validity conditions."""

    code = "shifted_config_invalid"


class PreconditionViolated(FTCirclesError):
    """An operation precondition on the input configuration fails."""

    code = "precondition_violated"


class StepTooSmall(FTCirclesError):
    """Finite-difference step below the supported range."""

    code = "step_too_small"


class StepTooLarge(FTCirclesError):
    """Finite-difference step above the supported range."""

    code = "step_too_large"
