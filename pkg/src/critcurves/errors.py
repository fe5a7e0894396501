"""Exception hierarchy shared by the whole package.

Domain errors signal bad *input* (a point that is not critical, a
pencil that does not exist at a boundary point, a malformed fraction).
ConsistencyError signals that an internal cross-check failed, which
means a bug, not bad input.
"""


class DomainError(ValueError):
    """Input violates a documented precondition."""


class ParameterError(DomainError):
    """Malformed or out-of-range parameter (bad fraction, n < 1, ...)."""


class CriticalityError(DomainError):
    """The point (theta, rho) is not a critical point."""


class ConsistencyError(RuntimeError):
    """Two supposedly-equivalent computations disagreed."""
