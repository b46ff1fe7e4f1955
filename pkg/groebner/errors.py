"""Errors raised by Gröbner computations."""
from algebra.errors import AlgebraError


class GroebnerError(AlgebraError):
    """A Gröbner computation could not be carried out."""


class InhomogeneousError(GroebnerError):
    """An operation that needs graded input received an inhomogeneous element."""


class ComputationLimitError(GroebnerError):
    """The S-pair cap or the wall-clock deadline was exceeded."""
