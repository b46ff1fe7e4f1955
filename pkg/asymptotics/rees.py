"""Rees-algebra presentations of ⊕ I^n M and the modules I^n M, I^n M/I^{n+1} M, M/I^n M."""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from algebra.free_module import FreeElement, FreeModule
from algebra.monomials import Bidegree, VariableSet, monomials_of_degree
from algebra.polynomial import Polynomial, PolynomialRing
from groebner.errors import GroebnerError, InhomogeneousError
from groebner.operations import eliminate, power_generators, scale_submodule
from groebner.submodule import PresentedModule, Submodule

logger = logging.getLogger(__name__)

ELIMINATION_VARIABLE = "t_"


class PowerKind(str, Enum):
    """Which module built from powers of I."""
    POWER = "power"
    GRADED_PIECE = "graded-piece"
    QUOTIENT = "quotient"


@dataclass(frozen=True, eq=False)
class ReesPresentation:
    """
    ⊕ I^n M (or ⊕ I^n M/I^{n+1} M) as a bigraded module over
    S = R[w_0..w_{m-1}], w_j of bidegree (deg g_j, 1).
    """
    generators: Tuple[Polynomial, ...]
    base_module: PresentedModule
    ring: PolynomialRing
    kernel: Submodule
    module: PresentedModule
    kind: PowerKind = PowerKind.POWER


def _rees_names(ring: PolynomialRing, count: int) -> List[str]:
    taken = set(ring.variables.names)
    for prefix in ("w", "u", "v", "rees"):
        names = [f"{prefix}{j}" for j in range(count)]
        if not taken.intersection(names):
            return names
    raise GroebnerError("Could not name the Rees variables")


def ideal_generators(ideal: Submodule) -> List[Polynomial]:
    """
    Minimal homogeneous generators of an ideal inside the maximal ideal.

    Raises:
        InhomogeneousError, GroebnerError
    """
    if not ideal.is_ideal:
        raise GroebnerError("Expected an ideal")
    gens = ideal.minimal_generators().polynomials()
    if not gens:
        raise GroebnerError("The zero ideal has no Rees presentation")
    for g in gens:
        degree = g.internal_degree()
        if degree is None:
            raise InhomogeneousError(f"Generator {g} is not homogeneous")
        if degree == 0:
            raise GroebnerError("The ideal is not contained in the irrelevant ideal")
    return gens


def unit_module(ring: PolynomialRing) -> PresentedModule:
    """R as a module over itself."""
    return PresentedModule.free_module(FreeModule.of_rank(ring, 1))


def rees_presentation(ideal: Submodule, module: Optional[PresentedModule] = None,
                      kind: PowerKind = PowerKind.POWER) -> ReesPresentation:
    """
    Present ⊕_n I^n M over the Rees ring by eliminating t from
    (w_j - t g_j) e_k together with the relations of M.
    """
    if kind == PowerKind.QUOTIENT:
        raise GroebnerError("M/I^n M does not form a Rees module")
    ring = ideal.ring
    if ring.variables.rees_vars:
        raise GroebnerError("Rees presentations start from a standard graded base ring")
    module = module or unit_module(ring)
    gens = ideal_generators(ideal)
    degrees = [g.internal_degree() for g in gens]
    names = _rees_names(ring, len(gens))
    base = ring.variables.base_vars
    rees_ring = PolynomialRing(ring.field, ring.variables.with_rees(names, degrees))
    # t gets degree 1 and w_j degree deg g_j + 1 so w_j - t g_j stays homogeneous
    t_ring = PolynomialRing(ring.field, VariableSet((ELIMINATION_VARIABLE,) + base, tuple(names),
                                                    tuple(d + 1 for d in degrees)))
    shifts = tuple(Bidegree(s.internal, 0) for s in module.free.shifts)
    t_free = FreeModule(t_ring, shifts)
    t = t_ring.gen(ELIMINATION_VARIABLE)
    vectors = []
    for name, g in zip(names, gens):
        relation = t_ring.gen(name) - t * t_ring.convert(g)
        vectors.extend(relation * t_free.basis(k) for k in range(t_free.rank))
    for rel in module.relations.generators:
        vectors.append(t_free.element([t_ring.convert(p) for p in rel.components()]))
    eliminated = eliminate(Submodule(t_free, vectors), base + tuple(names))

    free = FreeModule(rees_ring, shifts)
    kernel = Submodule(free, [FreeElement(free, v.terms) for v in eliminated.generators]).minimal_generators()
    presented = PresentedModule(free, kernel)
    if kind == PowerKind.GRADED_PIECE:
        extra = [rees_ring.convert(g) * free.basis(k) for g in gens for k in range(free.rank)]
        presented = PresentedModule(free, Submodule(free, list(kernel.generators) + extra).minimal_generators())
    logger.info("Rees presentation: %d Rees variables, %d kernel generators", len(names), len(kernel.generators))
    return ReesPresentation(tuple(gens), module, rees_ring, kernel, presented, kind)


def ideal_power(ideal: Submodule, n: int) -> Submodule:
    """I^n with a minimal generating set."""
    return Submodule.ideal(ideal.ring, power_generators(ideal.minimal_generators().polynomials(), n)).minimal_generators()


def module_power(ideal: Submodule, n: int, module: Optional[PresentedModule] = None,
                 kind: PowerKind = PowerKind.POWER) -> PresentedModule:
    """
    I^n M, I^n M / I^{n+1} M or M / I^n M as a presented R-module.
    """
    if n < 0:
        raise ValueError("Power must be non-negative")
    module = module or unit_module(ideal.ring)
    free = module.free
    gens = ideal.minimal_generators().polynomials()
    basis = [free.basis(k) for k in range(free.rank)]
    power = Submodule(free, scale_submodule(power_generators(gens, n), basis, free))
    if kind == PowerKind.POWER:
        return PresentedModule.subquotient(power, module.relations)
    if kind == PowerKind.GRADED_PIECE:
        following = scale_submodule(power_generators(gens, n + 1), basis, free)
        return PresentedModule.subquotient(power, Submodule(free, list(module.relations.generators) + following))
    return module.with_relations(power.generators)


def rees_component(presented: PresentedModule, n: int) -> PresentedModule:
    """
    The Rees-degree-n component of a bigraded S-module as an R-module.

    The component of S ⊗ F has R-basis w^b e_k with |b| = n - rees(e_k);
    relations are w^c g for each relation g of Rees degree at most n.
    """
    ring = presented.ring
    variables = ring.variables
    base_ring = ring.base_ring()
    nbase, nrees = variables.nbase, len(variables.rees_vars)
    basis = []
    shifts = []
    for k, shift in enumerate(presented.free.shifts):
        remaining = n - shift.rees
        if remaining < 0:
            continue
        for beta in monomials_of_degree(nrees, remaining):
            basis.append((k, beta))
            shifts.append(Bidegree(shift.internal + sum(b * d for b, d in zip(beta, variables.rees_degrees)), 0))
    index = {b: i for i, b in enumerate(basis)}
    free = FreeModule(base_ring, tuple(shifts))
    relations = []
    for g in presented.relations.generators:
        if g.is_zero():
            continue
        degree = g.bidegree()
        if degree is None:
            raise InhomogeneousError(f"Relation {g} is not bihomogeneous")
        if degree.rees > n:
            continue
        for gamma in monomials_of_degree(nrees, n - degree.rees):
            terms = {}
            for (k, e), c in g.terms.items():
                beta = tuple(a + b for a, b in zip(e[nbase:], gamma))
                terms[(index[(k, beta)], e[:nbase])] = c
            relations.append(FreeElement(free, terms))
    return PresentedModule(free, Submodule(free, relations))
