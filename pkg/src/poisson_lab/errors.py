"""Exception hierarchy shared across the package."""


class PoissonLabError(Exception):
    """Base class for all package errors."""


class DimensionError(PoissonLabError, ValueError):
    """Operands live in different ambient variable counts."""


class ExponentOverflowError(PoissonLabError, OverflowError):
    """An exponent left the signed 64-bit range."""


class ParseError(PoissonLabError, ValueError):
    """Malformed expression text.

    ``position`` is the 0-based character offset of the offending token,
    or ``None`` when the error is not tied to a location.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownIdentifierError(ParseError):
    pass


class StructureError(PoissonLabError, ValueError):
    """A Poisson structure table is malformed (non-skew, bad central rows, ...)."""


class NotLogCanonicalError(PoissonLabError):
    """Raised by ``check_log_canonical`` when some ratio {g_i,g_j}/(g_i g_j) is not a scalar."""

    def __init__(self, pair, ratio, message=None):
        self.pair = pair
        self.ratio = ratio
        super().__init__(message or f"pair {pair} has non-constant ratio")


class NoCanonicalPair(PoissonLabError):
    """The bracket {x,y} = xy admits no pair with nonzero constant bracket."""


class NotApplicableError(PoissonLabError):
    """None of the witness-transform hypotheses hold; ``failed`` lists the tests."""

    def __init__(self, failed):
        self.failed = list(failed)
        super().__init__("no hypothesis applies: " + "; ".join(self.failed))


class ReportNotClosedError(PoissonLabError):
    pass


class InternalConsistencyError(PoissonLabError, AssertionError):
    """Two independent computations that must agree did not."""
