"""Exception types raised by quditsynth."""


class QuditError(ValueError):
    """Base class for invalid inputs to synthesis routines."""


class NotUnitary(QuditError):
    pass


class NotSpecialUnitary(QuditError):
    pass


class NotNormalized(QuditError):
    pass


class ZeroVector(QuditError):
    pass


class DimMismatch(QuditError):
    pass


class LengthMismatch(QuditError):
    pass


class IndexOutOfRange(QuditError):
    pass


class DegenerateIndices(QuditError):
    pass


class EigFailure(RuntimeError):
    """Eigendecomposition residual stayed above tolerance."""
