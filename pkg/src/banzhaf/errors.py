"""Exception hierarchy shared across the package.

Each class maps to one CLI exit code (see cli.EXIT_CODES).
"""


class BanzhafError(Exception):
    """Base class for all package errors."""


class ParseError(BanzhafError):
    """Malformed system-spec document."""


class ValidationError(BanzhafError):
    """Well-formed document with semantically invalid content."""


class DomainError(BanzhafError):
    """Argument outside an operation's documented domain."""


class ContractViolationError(BanzhafError):
    """An operation was called on a value that does not satisfy its precondition."""


class UnsupportedMethodError(BanzhafError):
    """Requested computation method does not apply to the given system."""


class ResourceLimitError(BanzhafError):
    """An enumeration or oracle cap was exceeded."""


class CrossCheckError(BanzhafError):
    """Two independently computed power vectors disagree."""
