"""Errors raised by the asymptotic stabilization machinery."""
from algebra.errors import AlgebraError


class ThresholdViolation(AlgebraError):
    """A computed sequence is not constant beyond its certified threshold."""

    def __init__(self, threshold, values):
        super().__init__(f"Values {values} are not constant for n >= {threshold}")
        self.threshold = threshold
        self.values = values


class ArtinReesSearchError(AlgebraError):
    """No Artin-Rees number was found below the search cap."""
