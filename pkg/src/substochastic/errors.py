"""Exception types shared across the package."""


class DomainError(ValueError):
    """The input matrix is outside the polytope the operation requires."""


class DirectionError(ValueError):
    """A perturbation direction is incompatible with the matrix."""


class StepTooLargeError(ValueError):
    """The requested perturbation step leaves the polytope."""


class TooLargeError(ValueError):
    """The instance exceeds the guard for brute-force enumeration."""


class ParseError(ValueError):
    """Document text violates the exchange format."""


class InternalError(RuntimeError):
    """A self-check on a computed result failed; indicates a bug."""
