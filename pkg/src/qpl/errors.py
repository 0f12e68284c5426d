"""Shared exception types."""


class OrderMismatchError(ValueError):
    """Binary series operation applied to operands with different truncation orders."""


class NotInvertibleError(ValueError):
    """Reciprocal requested for a series whose constant term is not +1 or -1."""


class ParameterError(ValueError):
    """Arguments outside the valid range of an operation."""


class OracleBoundError(ValueError):
    """Brute-force oracle asked to count beyond its configured bound."""
