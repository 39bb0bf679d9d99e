# file: src/disk_rigidity/exceptions.py
"""Custom exceptions for the disk rigidity toolkit."""

from typing import Any, Dict, Optional


class DiskRigidityError(Exception):
    """Base exception for disk-rigidity-cli."""
    pass


class ParseError(DiskRigidityError):
    """Syntax error in a map-DSL string."""

    def __init__(self, message: str, text: str = "", position: Optional[int] = None):
        super().__init__(message)
        self.text = text
        self.position = position

    def __str__(self) -> str:
        details = super().__str__()
        if self.position is not None:
            details += f" (at position {self.position})"
            if self.text:
                details += f"\n  {self.text}\n  {' ' * self.position}^"
        return details


class PoleError(DiskRigidityError):
    """Evaluation hit a pole of the expression."""

    def __init__(self, message: str, point: Optional[complex] = None):
        super().__init__(message)
        self.point = point


class BoundaryPoleError(PoleError):
    """The expression has a genuine pole at the requested boundary point."""
    pass


class NonFiniteError(DiskRigidityError):
    """An intermediate value overflowed or became NaN."""
    pass


class DivergentLimitError(DiskRigidityError):
    """Extrapolation along the radial ladder did not settle."""
    pass


class IllConditionedFitError(DiskRigidityError):
    """A least-squares jet fit could not be trusted."""
    pass


class InputClassError(DiskRigidityError):
    """Input lies outside the class an operation is defined on."""

    def __init__(self, message: str, witness: Optional[complex] = None):
        super().__init__(message)
        self.witness = witness

    def __str__(self) -> str:
        details = super().__str__()
        if self.witness is not None:
            details += f" (witness z = {self.witness:.6g})"
        return details


class NotDivisibleError(DiskRigidityError):
    """f does not vanish at the requested interior null point."""
    pass


class NotAGeneratorError(InputClassError):
    """The function is not an infinitesimal generator on the disk."""
    pass


class RegionError(DiskRigidityError):
    """A region is inadmissible or an image is not a horocycle of the family."""
    pass


class DegenerateMobiusError(DiskRigidityError):
    """Coefficients (a, b, c, d) with ad - bc = 0 do not define a transformation."""
    pass


class PreconditionError(DiskRigidityError):
    """An analyzer's precondition does not hold for the subject."""
    pass


class IdentityMobiusError(PreconditionError):
    """The identity transformation has no isolated fixed points."""
    pass


class IntegrationError(DiskRigidityError):
    """The flow integrator failed."""
    pass


class StepUnderflowError(IntegrationError):
    """Step size collapsed while the trajectory hugged the unit circle."""
    pass


class UndeterminedClassificationError(DiskRigidityError):
    """Iteration neither converged nor showed an elliptic signature."""

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}

    def __str__(self) -> str:
        details = super().__str__()
        for key, value in sorted(self.diagnostics.items()):
            details += f"\n  {key}: {value}"
        return details


class ConfigurationError(DiskRigidityError):
    """Error related to configuration issues."""
    pass
