"""Exception types raised by degpath."""


class DegpathError(ValueError):
    """Base class for all argument and format errors."""


class OutOfRangeError(DegpathError):
    """A vertex id falls outside ``[0, n)``."""


class LoopError(DegpathError):
    """An edge joins a vertex to itself."""


class SizeError(DegpathError):
    """A size limit of the exact engines was exceeded."""


class MalformedGraph6Error(DegpathError):
    """Input is not a well-formed graph6 string."""


class BadArgsError(DegpathError):
    """Arguments violate an operation's preconditions."""


class BadParamsError(DegpathError):
    """Parameters violate the hypotheses of the lambda bound."""
