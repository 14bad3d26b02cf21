"""Exception hierarchy shared across the package."""


class ClassrankError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInput(ClassrankError):
    """An input file or document does not match its expected format."""


class DimensionMismatch(ClassrankError):
    """Array shapes are inconsistent (non-square matrix, length mismatch)."""


class ScaleViolation(ClassrankError):
    """A rating falls outside the declared scale, or the scale is invalid."""


class NonBinaryEntry(ClassrankError):
    """A competence matrix entry is neither 0 nor 1."""


class NonZeroDiagonal(ClassrankError):
    """Self-endorsements are present and the policy forbids them."""


class DegenerateNetwork(ClassrankError):
    """Nobody endorses anybody: no weights can be derived."""


class NoConvergence(ClassrankError):
    """Power iteration hit its iteration cap before meeting the tolerance."""


class EmptyInput(ClassrankError):
    """An operation that needs at least one element received none."""


class IndexOutOfRange(ClassrankError):
    """A student index does not exist in the survey."""
