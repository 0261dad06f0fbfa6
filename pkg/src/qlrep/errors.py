"""Exception types raised by qlrep."""


class QLError(ValueError):
    """Base class for all qlrep data errors."""


class NonPositive(QLError):
    """A probability (or a count used as a denominator) is not strictly positive."""


class NotNormalized(QLError):
    """A marginal or a transition-matrix column does not sum to one."""


class NotDoublyStochastic(QLError):
    """A transition-matrix row does not sum to one."""


class OutOfRange(QLError):
    """An interference coefficient lies outside [-1, 1]."""


class NotTrigonometric(QLError):
    """The context is hyperbolic, so no complex amplitude exists."""


class PhaseConstraintViolated(QLError):
    """Relative phases do not differ by pi modulo 2*pi."""


class Degenerate(QLError):
    """A Bloch point sits on a pole and cannot be mapped back to a context."""


class InconsistentInterference(QLError):
    """The two interference coefficients are not antisymmetric."""
