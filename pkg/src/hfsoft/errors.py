"""Exception hierarchy.

Everything raised for bad input derives from :class:`ValidationError`, so a
caller (the CLI in particular) can separate malformed data from genuine bugs.
"""


class HFSError(Exception):
    """Base class for all errors raised by :mod:`hfsoft`."""


class ValidationError(HFSError, ValueError):
    """Input data violates a structural constraint."""


class ParseError(ValidationError):
    """A scenario document could not be decoded."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class EmptyHFE(ValidationError):
    pass


class DegreeOutOfRange(ValidationError):
    pass


class DuplicateId(ValidationError):
    pass


class EmptyUniverse(ValidationError):
    pass


class EmptyAttributeSet(ValidationError):
    pass


class UnknownId(ValidationError):
    pass


class UnknownAttribute(UnknownId):
    pass


class UnknownElement(UnknownId):
    pass


class UnknownClass(ValidationError):
    pass


class MissingRow(ValidationError):
    pass


class MissingElement(ValidationError):
    pass


class NonTotalMap(ValidationError):
    pass


class ClassMismatch(ValidationError):
    pass


class NotBijective(ValidationError):
    pass


class NotManyOne(ValidationError):
    pass


class EnumerationTooLarge(ValidationError):
    pass
