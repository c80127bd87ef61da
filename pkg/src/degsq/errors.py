"""Exception types shared across the package."""


class DegsqError(ValueError):
    """Base class for all domain errors raised by this package."""


class NotStrictlyDecreasingError(DegsqError):
    """Partition parts are not strictly decreasing."""


class PartOutOfRangeError(DegsqError):
    """A partition part is not in the open interval (0, v)."""


class EdgeOutOfRangeError(DegsqError):
    """Edge count e is outside [0, v*(v-1)/2]."""


class VertexCountTooSmallError(DegsqError):
    """Vertex count below the operation's domain."""


class DenominatorZeroError(DegsqError):
    """The crossing-radius formula has a zero denominator for this v."""


class UnsupportedPError(DegsqError):
    """No fundamental solution classes are tabulated for this Pell constant."""


class CapExceededError(DegsqError):
    """Requested brute-force run exceeds the configured safety cap."""
