"""Errors raised while building or inspecting resolutions."""
from algebra.errors import AlgebraError


class ResolutionError(AlgebraError):
    """A resolution or chain complex does not satisfy a required property."""
