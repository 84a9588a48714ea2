"""Exception types shared across the package."""


class DemimatError(Exception):
    """Base class for all package-specific errors."""


class MalformedInputError(DemimatError, ValueError):
    """Input data does not satisfy the documented format (length, range, keys)."""


class SizeCapError(DemimatError):
    """Ground set exceeds the configured cap for the requested operation."""


class KindError(DemimatError):
    """An operation's precondition on the certified kind is not met."""


class RationalFunctionError(DemimatError):
    """The result would be a genuine rational function, outside Laurent scope."""


class UnsupportedSubstitutionError(DemimatError):
    """Substitution would create a non-monomial denominator."""


class InexactDivisionError(DemimatError):
    """Polynomial division left a nonzero remainder.

    The offending remainder is attached so callers can surface which
    identity broke.
    """

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class InvariantViolationError(DemimatError):
    """Two routes that must agree exactly disagreed; indicates a bug or bad input."""
