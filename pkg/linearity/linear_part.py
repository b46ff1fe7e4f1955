"""Linear part of a minimal resolution and the linearity defect."""
import logging

from algebra.polynomial import Polynomial
from groebner.operations import maximal_ideal_power
from groebner.submodule import PresentedModule, Submodule
from resolutions.betti import BettiTable
from resolutions.errors import ResolutionError
from resolutions.maps import ChainComplex
from resolutions.resolution import Resolution, free_resolution

logger = logging.getLogger(__name__)


def _linear_component(p: Polynomial) -> Polynomial:
    return p.homogeneous_component(1)


def linear_part_of_complex(complex_: ChainComplex) -> ChainComplex:
    """Keep only the internal-degree-1 component of every differential entry."""
    maps = [d.map_entries(_linear_component) for d in complex_.maps]
    return ChainComplex(maps, complex_.base)


def linear_part(resolution: Resolution) -> ChainComplex:
    """
    Raises:
        ResolutionError: if the resolution is not minimal
    """
    if not resolution.is_minimal():
        raise ResolutionError("The linear part is only defined for minimal resolutions")
    return linear_part_of_complex(resolution)


def top_nonvanishing_homology(complex_: ChainComplex) -> int:
    """Largest i with H_i != 0, or 0 when all homology vanishes."""
    for i in range(complex_.length, -1, -1):
        if not complex_.homology_vanishes(i):
            return i
    return 0


def linearity_defect(module: PresentedModule) -> int:
    """
    sup{i : H_i(lin F) != 0} for F the minimal resolution; the zero module has 0.
    """
    resolution = free_resolution(module)
    if resolution.module(0).rank == 0:
        return 0
    value = top_nonvanishing_homology(linear_part(resolution))
    logger.debug("lind = %d (resolution ranks %s)", value, resolution.ranks())
    return value


def ideal_linearity_defect(ideal: Submodule) -> int:
    """Linearity defect of an ideal (or submodule) viewed as a module."""
    return linearity_defect(PresentedModule.from_submodule(ideal))


def is_componentwise_linear(ideal: Submodule) -> bool:
    """
    True when I_<d>, the ideal generated by the degree-d elements of I,
    has a d-linear resolution for every generator degree d.
    """
    gens = ideal.minimal_generators().generators
    degrees = sorted({g.internal_degree() for g in gens})
    if any(d is None for d in degrees):
        raise ResolutionError("Componentwise linearity needs a homogeneous ideal")
    ring = ideal.ring
    for d in degrees:
        pieces = []
        for g in gens:
            e = g.internal_degree()
            if e <= d:
                pieces.extend(m * g for m in maximal_ideal_power(ring, d - e))
        component = Submodule(ideal.ambient, pieces).minimal_generators()
        table = BettiTable.from_resolution(free_resolution(PresentedModule.from_submodule(component)))
        if not table.is_linear(d):
            logger.debug("I_<%d> is not linear: %s", d, table.as_dict())
            return False
    return True
