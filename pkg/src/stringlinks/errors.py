"""Exception types shared across the package.

The CLI maps each class to an exit code, so library code raises these
rather than bare ``ValueError``.
"""


class StringLinkError(ValueError):
    """Base class for all package errors."""


class ParseError(StringLinkError):
    """Malformed textual or serialized input."""


class DomainError(StringLinkError):
    """Input is well formed but outside an operation's domain."""


class CapExceeded(StringLinkError):
    """A degree or truncation bound is above its configured cap."""
