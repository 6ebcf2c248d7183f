class WignerLabError(Exception):
    """Base class for errors raised by wignerlab."""


class DomainError(WignerLabError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class EnvelopeError(DomainError):
    """Parameters lie outside the range where numerical results are validated."""
