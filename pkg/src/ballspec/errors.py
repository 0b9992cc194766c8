"""Shared exception types."""


class InvalidDegreeError(ValueError):
    """Polynomial degree out of range for the ambient dimension."""


class InvalidParameterError(ValueError):
    """Parameters violate a documented precondition."""


class BudgetExceededError(RuntimeError):
    """A computation would exceed the configured resource budget."""

    def __init__(self, message: str, vertex_count: int | None = None):
        super().__init__(message)
        self.vertex_count = vertex_count


class ZeroFunctionError(ValueError):
    """An operation received an identically-zero function."""
