"""Errors raised by the algebra substrate."""


class AlgebraError(ValueError):
    """Base class for invalid algebraic input."""


class FieldError(AlgebraError):
    """Invalid coefficient field or field element."""


class RingMismatchError(AlgebraError):
    """Operands live over different rings, variable sets or fields."""


class ParseError(AlgebraError):
    """Malformed polynomial text; ``offset`` is the 0-based character index."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(message)
        self.offset = offset


class UnknownVariableError(RingMismatchError):
    """Polynomial text names a variable the ring does not declare."""

    def __init__(self, name: str):
        super().__init__(f"Unknown variable {name!r}")
        self.name = name
