"""Free resolutions, chain complexes and Betti tables."""
from .betti import BettiTable
from .errors import ResolutionError
from .maps import ChainComplex, ModuleMap
from .resolution import Resolution, free_resolution, minimize, syzygy_module

__all__ = [
    "BettiTable",
    "ResolutionError",
    "ChainComplex",
    "ModuleMap",
    "Resolution",
    "free_resolution",
    "minimize",
    "syzygy_module",
]
