"""Linearity defect of a quotient through the mapping cone of an inclusion.

For M ⊆ P with minimal resolutions F -> M, G -> P and a comparison map
φ: F -> G lifting the inclusion, the mapping cone W_i = G_i ⊕ F_{i-1}
resolves P/M. When φ(F) ⊆ m^2 G, W is minimal with linear part
lin G ⊕ lin F[-1], so lind(P/M) = max(lind P, lind M + 1).
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from algebra.free_module import FreeElement, FreeModule
from groebner.submodule import PresentedModule, Submodule, select_minimal
from resolutions.errors import ResolutionError
from resolutions.maps import ChainComplex, ModuleMap
from resolutions.resolution import Resolution, free_resolution

from .errors import LiftingConditionError
from .linear_part import linear_part, linear_part_of_complex, top_nonvanishing_homology

logger = logging.getLogger(__name__)


@dataclass
class Inclusion:
    """M ⊆ P, with M given by elements of the free module presenting P."""
    ambient: PresentedModule
    generators: Sequence[FreeElement]


@dataclass
class MappingConeReport:
    lind_ambient: int
    lind_submodule: int
    predicted: int
    cone_lind: int
    comparison: List[ModuleMap] = field(default_factory=list)


def _check_minimal_presentation(module: PresentedModule):
    for g in module.relations.generators:
        if any(not any(e) for _, e in g.terms):
            raise ResolutionError("The ambient module needs a minimal presentation")


def comparison_maps(inclusion: Inclusion):
    """
    Resolve M and P and lift the inclusion to a chain map φ: F -> G.

    Returns:
        (resolution of M, resolution of P, [φ_0, φ_1, ...])
    """
    ambient = inclusion.ambient
    _check_minimal_presentation(ambient)
    free = ambient.free
    gens = select_minimal([free.rebase(g) for g in inclusion.generators], ambient.relations.generators,
                          free, ambient.relations.order)
    submodule = PresentedModule.subquotient(Submodule(free, gens), ambient.relations)
    res_sub = free_resolution(submodule)
    res_ambient = free_resolution(ambient)
    if res_sub.module(0).rank != len(gens) or res_ambient.module(0).rank != free.rank:
        raise ResolutionError("Minimization changed the generators of the inclusion")

    phis = [ModuleMap(res_sub.module(0), res_ambient.module(0), tuple(gens))]
    for i in range(1, res_sub.length + 1):
        source = res_sub.module(i)
        target = res_ambient.module(i)
        previous = phis[i - 1]
        d_sub = res_sub.differential(i)
        d_ambient = res_ambient.differential(i)
        image = Submodule(d_ambient.target, d_ambient.columns) if d_ambient is not None else None
        columns = []
        for column in d_sub.columns:
            v = previous.apply(FreeElement(previous.source, column.terms))
            if v.is_zero():
                columns.append(target.zero())
                continue
            lifted = image.lift(v) if image is not None else None
            if lifted is None:
                raise ResolutionError(f"Comparison map does not lift at degree {i}")
            columns.append(FreeElement(target, lifted.terms))
        phis.append(ModuleMap(source, target, tuple(columns)))
    return res_sub, res_ambient, phis


def check_square_condition(phis: Sequence[ModuleMap]):
    """
    Raises:
        LiftingConditionError: at the first degree with an entry of x-order below 2
    """
    for i, phi in enumerate(phis):
        variables = phi.source.ring.variables
        for column in phi.columns:
            if any(variables.base_degree(e) < 2 for _, e in column.terms):
                raise LiftingConditionError(i)


def _stack(top: Optional[FreeElement], bottom: Optional[FreeElement], target: FreeModule, split: int) -> FreeElement:
    terms = {}
    if top is not None:
        terms.update(top.terms)
    if bottom is not None:
        for (p, e), c in bottom.terms.items():
            terms[(p + split, e)] = c
    return FreeElement(target, terms)


def mapping_cone(res_sub: Resolution, res_ambient: Resolution, phis: Sequence[ModuleMap]) -> ChainComplex:
    """W_i = G_i ⊕ F_{i-1} with ∂(g, f) = (∂g + φ f, -∂f)."""
    top = max(res_ambient.length, res_sub.length + 1)
    ring = res_ambient.ring
    empty = FreeModule(ring, ())
    modules = []
    for i in range(top + 1):
        g = res_ambient.module(i)
        f = res_sub.module(i - 1) if i >= 1 else empty
        modules.append(g.direct_sum(f))
    maps = []
    for i in range(1, top + 1):
        target = modules[i]
        lower = modules[i - 1]
        split = res_ambient.module(i - 1).rank
        d_ambient = res_ambient.differential(i)
        columns = []
        for c in range(res_ambient.module(i).rank):
            columns.append(_stack(d_ambient.columns[c] if d_ambient else None, None, lower, split))
        phi = phis[i - 1] if i - 1 < len(phis) else None
        d_sub = res_sub.differential(i - 1) if i >= 2 else None
        for c in range(res_sub.module(i - 1).rank):
            image = phi.columns[c] if phi is not None else None
            boundary = -d_sub.columns[c] if d_sub is not None else None
            columns.append(_stack(image, boundary, lower, split))
        maps.append(ModuleMap(target, lower, tuple(columns)))
    return ChainComplex(maps, modules[0])


def mapping_cone_lind(inclusion: Inclusion) -> MappingConeReport:
    """
    lind(P/M) = max(lind P, lind M + 1), valid once the lifted comparison
    maps land in m^2. The cone's own linear part is inspected as a check.

    Raises:
        LiftingConditionError: when the constructed lift violates the m^2 condition
    """
    res_sub, res_ambient, phis = comparison_maps(inclusion)
    check_square_condition(phis)
    lind_sub = top_nonvanishing_homology(linear_part(res_sub)) if res_sub.module(0).rank else 0
    lind_ambient = top_nonvanishing_homology(linear_part(res_ambient)) if res_ambient.module(0).rank else 0
    predicted = max(lind_ambient, lind_sub + 1)
    cone = mapping_cone(res_sub, res_ambient, phis)
    cone_lind = top_nonvanishing_homology(linear_part_of_complex(cone))
    if cone_lind != predicted:
        logger.warning("Mapping cone linear part gives %d, formula gives %d", cone_lind, predicted)
    return MappingConeReport(lind_ambient, lind_sub, predicted, cone_lind, list(phis))
