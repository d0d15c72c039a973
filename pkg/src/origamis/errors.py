"""Exception hierarchy shared by the whole package."""


class OrigamiError(Exception):
    """Base class for all package errors."""


class DomainError(OrigamiError, ValueError):
    """Invalid mathematical input (zero denominator, bad signature, ...)."""


class ParseError(OrigamiError, ValueError):
    """Malformed textual input; carries a human-readable position hint."""


class ConsistencyError(OrigamiError, RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""
