"""Exception types shared across the toolkit."""


class FcaError(Exception):
    """Base class for every domain error raised by this package."""


class DimensionError(FcaError):
    """A bit vector's width does not match the universe it is applied to."""


class NamingError(FcaError):
    """Duplicate, empty, or colliding object/attribute names."""


class UnknownAttributeError(FcaError):
    """An attribute name that does not exist in the context."""


class UnknownObjectError(FcaError):
    """An object name that does not exist in the context."""


class NotFoundError(FcaError):
    """A concept (or other item) is not part of the structure queried."""


class ParseError(FcaError):
    """Malformed input file. Carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SessionError(FcaError):
    """Illegal operation on an exploration session (e.g. answering when done)."""


class InvalidCounterexample(FcaError):
    """Counterexample rejected; `reason` is machine readable.

    Reasons: does_not_violate, violates_accepted, duplicate_name.
    """

    def __init__(self, reason: str, message: str):
        self.reason = reason
        super().__init__(message)


class SessionFormatError(FcaError):
    """Saved session payload is corrupted or has an unsupported version."""
