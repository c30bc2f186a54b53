"""Exception types shared across the package."""


class EffboundError(Exception):
    """Base class for all errors raised by effbound."""


class DimensionMismatch(EffboundError, ValueError):
    """Operands live in a different number of variables."""


class ScaleGuardExceeded(EffboundError):
    """A desk-scale cap (subset count, Groebner size, grid size) was exceeded."""


class NotZeroDimensional(EffboundError):
    """The ideal has a positive-dimensional zero set."""


class NotASolution(EffboundError, ValueError):
    """A point offered as a solution does not satisfy the system."""


class MultiplicityCheckFailed(EffboundError):
    """The origin is not an isolated solution after translation/substitution."""
