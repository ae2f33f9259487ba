"""
Exception hierarchy. Every error carries the exit code the command line reports.
"""


class GradinfError(Exception):
    """Base class for all expected failures."""

    exit_code = 3
    kind = "internal"


class ParseError(GradinfError):
    """Malformed expression; column is 1-based."""

    exit_code = 1
    kind = "parse"

    def __init__(self, message: str, column: int = 0):
        super().__init__(f"{message} at column {column}" if column else message)
        self.column = column


class UsageError(GradinfError):
    """Bad command line arguments."""

    exit_code = 1
    kind = "usage"


class PreconditionError(GradinfError):
    """An operation was called outside its domain."""

    exit_code = 2
    kind = "precondition"


class CrossCheckError(GradinfError):
    """Two independent computations disagree."""

    exit_code = 3
    kind = "cross_check"


class TruncationError(GradinfError):
    """A truncated series expansion is too short to certify a degree."""

    exit_code = 3
    kind = "truncation"
