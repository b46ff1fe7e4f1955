"""Certified stabilization threshold N(C) for lind of the components of a Rees module.

For the minimal S-resolution F of C with syzygies M_i ⊆ F_{i-1}:

  - the image of Tor_i(S/m^{q+1}S, C) -> Tor_i(S/m^q S, C) is the bigraded
    module (m^{q+1}F_{i-1} ∩ M_i + m^q M_i) / m^q M_i,
  - T(i) is the least h with m^q F_{i-1} ∩ M_i = m^{q-h}(m^h F_{i-1} ∩ M_i)
    for all q >= h,
  - c(i, q) is the persistence degree of that image and n(i) = max_q c(i, q),
  - N(C) = max(pdeg C, n(1), ..., n(min(glind bound, pd C))).
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from algebra.free_module import FreeElement, FreeModule
from algebra.orders import WeightOverOrder
from groebner.operations import intersect, maximal_ideal_power, scale_submodule
from groebner.submodule import PresentedModule, Submodule
from linearity.tor import tor_dimension
from resolutions.resolution import Resolution, free_resolution, syzygy_module

from .errors import ArtinReesSearchError
from .persistence import NEG_INF, POS_INF, Degree, degree_json, fiber_hilbert, persistence_degree
from .rees import ReesPresentation, rees_component

logger = logging.getLogger(__name__)

DEFAULT_WINDOW = 3
DEFAULT_MAX_H = 8


def _power_of_m(module: FreeModule, q: int) -> Submodule:
    """m^q F."""
    basis = [module.basis(k) for k in range(module.rank)]
    return Submodule(module, scale_submodule(maximal_ideal_power(module.ring, q), basis, module))


def _empty(resolution: Resolution) -> PresentedModule:
    return PresentedModule.free_module(FreeModule(resolution.ring, ()))


class FiltrationCache:
    """Memoizes X_q = m^q F_{i-1} ∩ M_i for one syzygy module."""

    def __init__(self, resolution: Resolution, i: int):
        self.syzygy = syzygy_module(resolution, i)
        self.ambient = self.syzygy.ambient
        self._cache: Dict[int, Submodule] = {}

    def intersection(self, q: int) -> Submodule:
        if q not in self._cache:
            if q <= 0:
                self._cache[q] = self.syzygy
            else:
                self._cache[q] = intersect(_power_of_m(self.ambient, q), self.syzygy)
        return self._cache[q]

    def scaled(self, q: int, submodule: Submodule) -> Submodule:
        """m^q times a submodule."""
        return Submodule(self.ambient, scale_submodule(maximal_ideal_power(self.ambient.ring, q),
                                                       submodule.generators, self.ambient))

    def stable_at(self, h: int, q: int) -> bool:
        """m^q F ∩ M == m^{q-h}(m^h F ∩ M); the right side is always contained in the left."""
        target = self.scaled(q - h, self.intersection(h))
        return self.intersection(q).is_subset(target)


def tor_image(resolution: Resolution, i: int, q: int) -> PresentedModule:
    """
    Image of Tor_i(S/m^{q+1}S, C) -> Tor_i(S/m^q S, C) as a presented module.

    Args:
        resolution: Minimal resolution of C
        i: Homological degree, at least 1
        q: Truncation exponent, at least 1
    """
    if i < 1 or q < 1:
        raise ValueError("tor_image needs i >= 1 and q >= 1")
    if i > resolution.length:
        return _empty(resolution)
    cache = FiltrationCache(resolution, i)
    return _tor_image(cache, q)


def _tor_image(cache: FiltrationCache, q: int) -> PresentedModule:
    scaled = cache.scaled(q, cache.syzygy)
    numerator = cache.intersection(q + 1) + scaled
    return PresentedModule.subquotient(numerator, scaled)


def artin_rees_number(resolution: Resolution, i: int, window: int = DEFAULT_WINDOW,
                      max_h: int = DEFAULT_MAX_H, cache: Optional[FiltrationCache] = None) -> int:
    """
    The least h >= 1 with m^q F ∩ M_i = m^{q-h}(m^h F ∩ M_i), checked for q in [h, h + window].

    Raises:
        ArtinReesSearchError: if no h up to ``max_h`` passes
    """
    cache = cache or FiltrationCache(resolution, i)
    if cache.syzygy.is_zero():
        return 1
    for h in range(1, max_h + 1):
        if all(cache.stable_at(h, q) for q in range(h + 1, h + window + 1)):
            logger.debug("T(%d) = %d", i, h)
            return h
    raise ArtinReesSearchError(f"No Artin-Rees number up to {max_h} for syzygy {i}")


def initial_form_module(resolution: Resolution, i: int) -> Submodule:
    """
    The module K_i of lowest-m-order forms of M_i inside gr_m F_{i-1} ≅ F_{i-1}.

    For a homogeneous vector the m-order of x^a w^b e_k equals its internal
    degree minus (shift_k + internal degree of w^b), so lowest-order forms are
    the terms maximizing shift_k + deg w^b.
    """
    syzygy = syzygy_module(resolution, i)
    ambient = syzygy.ambient
    variables = ambient.ring.variables
    weights = tuple(0 for _ in variables.base_vars) + variables.rees_degrees
    order = WeightOverOrder(weights, tuple(s.internal for s in ambient.shifts), ambient.default_order)
    forms = []
    for g in syzygy.with_order(order).groebner_basis():
        top = max(order.weight(p, e) for p, e in g.terms)
        forms.append(FreeElement(ambient, {(p, e): c for (p, e), c in g.terms.items() if order.weight(p, e) == top}))
    return Submodule(ambient, forms).minimal_generators()


@dataclass
class InitialFormReading:
    """Both readings of sup{q : (K_i / n K_i)_q != 0}."""
    m_adic: Degree
    rees: Degree

    def to_dict(self) -> dict:
        return {"mAdic": degree_json(self.m_adic), "rees": degree_json(self.rees)}


def read_initial_forms(initial: Submodule) -> InitialFormReading:
    """Top m-order and top Rees degree of the minimal generators of K."""
    gens = [g for g in initial.generators if not g.is_zero()]
    if not gens:
        return InitialFormReading(NEG_INF, NEG_INF)
    variables = initial.ring.variables
    m_adic = max(variables.base_degree(e) for g in gens for _, e in g.terms)
    data = fiber_hilbert(PresentedModule.from_submodule(initial))
    if data.is_zero():
        rees: Degree = NEG_INF
    elif data.polynomial_is_zero():
        rees = data.last_nonzero_degree()
    else:
        rees = POS_INF
    return InitialFormReading(m_adic, rees)


@dataclass
class LevelData:
    """Constants attached to one homological degree."""
    i: int
    artin_rees: int
    persistence: List[Degree]
    reading: Optional[InitialFormReading] = None

    @property
    def value(self) -> Degree:
        return max(self.persistence, default=NEG_INF)

    def to_dict(self) -> dict:
        data = {
            "i": self.i,
            "T": self.artin_rees,
            "c": [degree_json(c) for c in self.persistence],
            "n": degree_json(self.value),
        }
        if self.reading is not None:
            data["initialForms"] = self.reading.to_dict()
            data["initialFormsAgree"] = self.reading.m_adic == self.artin_rees
        return data


@dataclass
class StabilityCertificate:
    """lind C_n is constant for n >= threshold."""
    pd: int
    glind_bound: int
    n0: Degree
    levels: List[LevelData] = field(default_factory=list)

    @property
    def threshold(self) -> Degree:
        return max([self.n0] + [level.value for level in self.levels])

    def level(self, i: int) -> LevelData:
        for level in self.levels:
            if level.i == i:
                return level
        raise KeyError(i)

    def to_dict(self) -> dict:
        return {
            "pd": self.pd,
            "glindBound": self.glind_bound,
            "perLevel": [level.to_dict() for level in self.levels],
            "n0": degree_json(self.n0),
            "N": degree_json(self.threshold),
        }


def stability_threshold(presentation: Union[ReesPresentation, PresentedModule], glind_bound: Optional[int] = None,
                        certify: bool = False, window: int = DEFAULT_WINDOW,
                        max_h: int = DEFAULT_MAX_H) -> StabilityCertificate:
    """
    Compute N(C) for a bigraded module over a Rees ring.

    Args:
        presentation: The Rees module C
        glind_bound: Upper bound for the global linearity defect of the base ring
            (default: number of base variables)
        certify: Also compute the initial-form module K_i at each level
        window: Verification window for the Artin-Rees numbers
        max_h: Search cap for the Artin-Rees numbers
    """
    module = presentation.module if isinstance(presentation, ReesPresentation) else presentation
    bound = module.ring.variables.nbase if glind_bound is None else glind_bound
    n0 = persistence_degree(module)
    if n0 == NEG_INF:
        return StabilityCertificate(0, bound, n0)
    resolution = free_resolution(module)
    certificate = StabilityCertificate(resolution.length, bound, n0)
    for i in range(1, min(bound, resolution.length) + 1):
        cache = FiltrationCache(resolution, i)
        h = artin_rees_number(resolution, i, window, max_h, cache)
        values = [persistence_degree(_tor_image(cache, q)) for q in range(1, h + 1)]
        level = LevelData(i, h, values)
        if certify:
            level.reading = read_initial_forms(initial_form_module(resolution, i))
            if level.reading.m_adic != h:
                logger.warning("Initial forms give %s for T(%d) = %d", level.reading.m_adic, i, h)
        certificate.levels.append(level)
        logger.info("Level %d: T = %d, c = %s", i, h, [degree_json(c) for c in values])
    logger.info("Stability threshold N = %s", degree_json(certificate.threshold))
    return certificate


def flat_base_change_check(presentation: Union[ReesPresentation, PresentedModule], i: int, q: int,
                           n: int) -> Tuple[int, int]:
    """
    dim Tor_i^R(R/m^q, C_n) and dim Tor_i^S(S/m^q S, C) in Rees degree n;
    flatness of S over R makes them equal.
    """
    module = presentation.module if isinstance(presentation, ReesPresentation) else presentation
    over_s = free_resolution(module)
    over_r = free_resolution(rees_component(module, n))
    return tor_dimension(over_r, i, q), tor_dimension(over_s, i, q, rees=n)
