"""Exception hierarchy shared by every part of the package."""


class TrirealError(Exception):
    """Base class for all package errors."""


class MalformedInput(TrirealError, ValueError):
    """Text could not be parsed into a sequence or graph."""


class NotReducible(TrirealError):
    """A Havel-Hakimi step produced a negative term."""


class InvalidCirculant(TrirealError, ValueError):
    pass


class GraphError(TrirealError, ValueError):
    """Out-of-range vertex, duplicate edge or missing edge."""


class NoSuchCycle(TrirealError):
    pass


class NotGraphical(TrirealError):
    pass


class ExcludedCase(TrirealError):
    """The width-1 request (p, q, m) = (b, 2, b + 2) has no top monotone cycle."""


class MOutOfRange(TrirealError, ValueError):
    pass


class InfeasibleArc(TrirealError):
    pass


class PreconditionViolated(TrirealError):
    pass


class UnsupportedSpec(TrirealError):
    pass


class UnsupportedClass(TrirealError):
    pass


class NoTriangularRealization(TrirealError):
    pass


class InternalInvariantViolation(TrirealError, AssertionError):
    """A construction produced something its own verifiers reject."""


class BudgetExceeded(TrirealError):
    """The exhaustive search stopped before it could decide."""
