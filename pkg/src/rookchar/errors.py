"""Shared exception types."""


class ParseError(ValueError):
    """Raised when an element literal or a JSON config cannot be parsed."""


class ResourceGuardError(RuntimeError):
    """Raised when a request would exceed a combinatorial or memory guard."""
