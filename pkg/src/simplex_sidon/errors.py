"""Exception types raised across the package."""


class SimplexSidonError(Exception):
    """Base class for all errors raised by this package."""


class NonSquare(SimplexSidonError, ValueError):
    pass


class SingularBasis(SimplexSidonError, ValueError):
    pass


class DimensionMismatch(SimplexSidonError, ValueError):
    pass


class GroupMismatch(SimplexSidonError, ValueError):
    pass


class ElementNotInGroup(SimplexSidonError, ValueError):
    pass


class CardinalityOverflow(SimplexSidonError):
    """Enumeration would exceed the configured budget."""


class NotGenerating(SimplexSidonError):
    pass


class DegenerateRounding(SimplexSidonError):
    pass


class UnsupportedParameters(SimplexSidonError, ValueError):
    pass


class UnsupportedDimension(SimplexSidonError, ValueError):
    pass


class ConstructionInvalid(SimplexSidonError):
    pass


class WitnessError(SimplexSidonError):
    """A precondition failed; ``verdict`` carries the counterexample."""

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class NotABhSet(WitnessError):
    pass


class NotAnHBasis(WitnessError):
    pass


class NotAPacking(WitnessError):
    pass


class NotACovering(WitnessError):
    pass


class BudgetExceeded(SimplexSidonError):
    """Search stopped before exceeding its work budget.

    ``watermark`` is the last determinant value that was scanned completely
    (``None`` if nothing was scanned).
    """

    def __init__(self, message, watermark=None):
        super().__init__(message)
        self.watermark = watermark


class NotFound(SimplexSidonError):
    """An exhaustive search finished without a hit."""

    def __init__(self, message, checked=0):
        super().__init__(message)
        self.checked = checked
