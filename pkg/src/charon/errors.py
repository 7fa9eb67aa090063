"""Exception hierarchy shared by all charon modules."""


class CharonError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(CharonError):
    """An argument or data structure violates a documented precondition."""


class UnsupportedShapeError(ValidationError):
    """The operation does not support the given tensor shape."""


class FormatError(CharonError):
    """A file does not carry the expected magic/version/layout."""


class CorruptionError(CharonError):
    """A file has the right format markers but an inconsistent payload."""


class NumericalError(CharonError):
    """Training produced a non-finite quantity."""

    def __init__(self, message: str, last_record: str | None = None):
        super().__init__(message)
        self.last_record = last_record
