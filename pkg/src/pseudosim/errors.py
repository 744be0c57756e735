"""Exception types shared across the library."""


class ContractViolation(ValueError):
    """An argument breaks a documented precondition."""


class DimensionError(ContractViolation):
    """Matrix shapes are incompatible with the requested operation."""


class RealnessViolation(ContractViolation):
    """A spectrum that must be real carries significant imaginary parts."""

    def __init__(self, message, offenders=()):
        super().__init__(message)
        self.offenders = tuple(offenders)


class NumericalError(RuntimeError):
    """A computation failed to meet its numerical guarantees."""


class ClassificationError(NumericalError):
    """Structural zeros could not be separated from genuine eigenvalues.

    Raised when the smallest-magnitude eigenvalues that a rank argument says
    must be structural zeros are not all below the zero threshold.  This
    signals either a wrong rank or an input whose genuine eigenvalues sit too
    close to zero; the caller decides, the library does not guess.
    """
