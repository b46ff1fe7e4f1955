"""Errors raised by linearity-defect computations."""
from algebra.errors import AlgebraError


class LiftingConditionError(AlgebraError):
    """A lifted comparison map leaves m^2 times the target at some homological degree."""

    def __init__(self, degree: int, message: str = ""):
        super().__init__(message or f"Lifted map at homological degree {degree} is not inside m^2")
        self.degree = degree
