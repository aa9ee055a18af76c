"""Exception hierarchy shared by all modules."""


class CircisError(ValueError):
    """Base class for every error raised by this package."""


class OutOfRange(CircisError):
    pass


class NotSymmetric(CircisError):
    pass


class OrderMismatch(CircisError):
    pass


class EmptySpec(CircisError):
    pass


class BadIndex(CircisError):
    pass


class PreconditionViolated(CircisError):
    pass


class EmptyGraph(CircisError):
    pass


class EmptySet(CircisError):
    pass


class BadGapSum(CircisError):
    pass


class CapExceeded(CircisError):
    pass


class UnknownSuite(CircisError):
    pass


class ParseError(CircisError):
    pass
