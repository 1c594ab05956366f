"""Shared exception types."""


class TelerevError(Exception):
    """Base class for all telerev errors."""


class DimensionError(TelerevError, ValueError):
    """Operands have incompatible or unsupported dimensions."""


class DomainError(TelerevError, ValueError):
    """A numeric argument lies outside its mathematical domain."""
