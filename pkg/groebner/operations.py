"""Derived submodule operations: intersections, colons, saturation, elimination."""
import logging
from itertools import combinations_with_replacement
from typing import Iterable, List, Sequence, Union

from algebra.errors import RingMismatchError
from algebra.free_module import FreeElement, FreeModule
from algebra.monomials import VariableSet, monomials_of_degree
from algebra.orders import EliminationOrder, TermOverPosition
from algebra.polynomial import Polynomial, PolynomialRing

from .errors import GroebnerError
from .submodule import Submodule

logger = logging.getLogger(__name__)

DEFAULT_SATURATION_STEPS = 32


def linear_combination(coefficients: FreeElement, generators: Sequence[FreeElement], ambient: FreeModule) -> FreeElement:
    """sum_j coefficients_j * generators_j."""
    result = ambient.zero()
    for j, coeff in enumerate(coefficients.components()):
        if not coeff.is_zero():
            result = result + coeff * FreeElement(ambient, generators[j].terms)
    return result


def intersect(a: Submodule, b: Submodule) -> Submodule:
    """
    A ∩ B via the syzygies of [a ; b]: for each syzygy (u, v) the vector
    sum u_i a_i lies in both.
    """
    if not a.ambient.same_underlying(b.ambient):
        raise RingMismatchError("Intersection of submodules of different free modules")
    ambient = a.ambient
    if a.is_zero() or b.is_zero():
        return Submodule(ambient, [], a.order)
    combined = Submodule(ambient, a.generators + tuple(FreeElement(ambient, g.terms) for g in b.generators))
    count = len(a.generators)
    vectors = []
    for syz in combined.syzygies().generators:
        head = syz.project(range(count), FreeModule(ambient.ring, combined.source_module().shifts[:count]))
        vectors.append(linear_combination(head, a.generators, ambient))
    return Submodule(ambient, vectors, a.order).minimal_generators()


def quotient_by_element(submodule: Submodule, f: Polynomial) -> Submodule:
    """(N : f) = {v : f v in N}."""
    ambient = submodule.ambient
    rank = ambient.rank
    scaled = [f * ambient.basis(k) for k in range(rank)]
    combined = Submodule(ambient, scaled + list(submodule.generators))
    vectors = [FreeElement(ambient, syz.project(range(rank), ambient).terms)
               for syz in combined.syzygies().generators]
    vectors = [v for v in vectors if not v.is_zero()]
    return Submodule(ambient, vectors, submodule.order).minimal_generators()


def quotient(submodule: Submodule, ideal: Union[Submodule, Iterable[Polynomial]]) -> Submodule:
    """
    The colon (N : J) = {v : J v ⊆ N}.

    Args:
        submodule: N
        ideal: J, as an ideal submodule or a list of its generators
    """
    polys = ideal.polynomials() if isinstance(ideal, Submodule) else list(ideal)
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        ambient = submodule.ambient
        return Submodule(ambient, [ambient.basis(k) for k in range(ambient.rank)], submodule.order)
    result = quotient_by_element(submodule, polys[0])
    for f in polys[1:]:
        result = intersect(result, quotient_by_element(submodule, f))
    return result


def saturation(submodule: Submodule, ideal: Union[Submodule, Iterable[Polynomial]],
               max_steps: int = DEFAULT_SATURATION_STEPS) -> Submodule:
    """
    (N : J^∞), the union of the increasing chain N ⊆ (N : J) ⊆ (N : J^2) ⊆ ...

    Raises:
        GroebnerError: if the chain has not stabilized after ``max_steps`` colons
    """
    polys = ideal.polynomials() if isinstance(ideal, Submodule) else list(ideal)
    current = submodule.minimal_generators()
    for step in range(max_steps):
        following = quotient(current, polys)
        if following.is_subset(current):
            logger.debug("Saturation stabilized after %d colon steps", step + 1)
            return current
        current = following
    raise GroebnerError(f"Saturation did not stabilize within {max_steps} steps")


def restrict_ring(ring: PolynomialRing, keep: Sequence[str]) -> PolynomialRing:
    """The subring on the variables named in ``keep``, preserving their degrees."""
    variables = ring.variables
    base = tuple(n for n in variables.base_vars if n in keep)
    rees = [(n, d) for n, d in zip(variables.rees_vars, variables.rees_degrees) if n in keep]
    return PolynomialRing(ring.field, VariableSet(base, tuple(n for n, _ in rees), tuple(d for _, d in rees)))


def eliminate(submodule: Submodule, keep: Sequence[str]) -> Submodule:
    """
    Generators of N ∩ k[keep]^r, as a submodule over the subring.

    Uses a term-over-position elimination order with the dropped
    variables in the leading block.
    """
    ring = submodule.ring
    names = ring.variables.names
    unknown = [n for n in keep if n not in names]
    if unknown:
        raise RingMismatchError(f"Unknown variables {unknown}")
    block = tuple(i for i, n in enumerate(names) if n not in keep)
    order = TermOverPosition(EliminationOrder(block, ring.variables.internal_weights))
    basis = submodule.with_order(order).groebner_basis()
    target_ring = restrict_ring(ring, keep)
    target = FreeModule(target_ring, submodule.ambient.shifts)
    positions = [i for i, n in enumerate(names) if n in keep]
    kept = []
    for g in basis:
        if any(e[i] for _, e in g.terms for i in block):
            continue
        kept.append(FreeElement(target, {(p, tuple(e[i] for i in positions)): c for (p, e), c in g.terms.items()}))
    logger.debug("Elimination kept %d of %d basis vectors", len(kept), len(basis))
    return Submodule(target, kept)


def power_generators(polys: Sequence[Polynomial], n: int) -> List[Polynomial]:
    """All degree-n products of ``polys`` without duplicates (n = 0 gives [1])."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return []
    ring = polys[0].ring
    seen = set()
    result = []
    for combo in combinations_with_replacement(range(len(polys)), n):
        product = ring.one()
        for j in combo:
            product = product * polys[j]
        if product.is_zero() or product in seen:
            continue
        seen.add(product)
        result.append(product)
    return result


def maximal_ideal_power(ring: PolynomialRing, q: int) -> List[Polynomial]:
    """Monomial generators of m^q for m the ideal of the base variables."""
    nbase = ring.variables.nbase
    pad = (0,) * (ring.nvars - nbase)
    return [ring.monomial(exps + pad) for exps in monomials_of_degree(nbase, q)]


def scale_submodule(polys: Sequence[Polynomial], generators: Iterable[FreeElement], ambient: FreeModule) -> List[FreeElement]:
    """Products p * g for every p in polys and g in generators."""
    gens = list(generators)
    return [p * FreeElement(ambient, g.terms) for p in polys for g in gens]


def groebner_basis(submodule: Submodule, order=None) -> Submodule:
    """The reduced Gröbner basis as a new submodule with the GB cached."""
    source = submodule.with_order(order) if order is not None else submodule
    basis = Submodule(source.ambient, source.groebner_basis(), source.order)
    basis._plain = source._run()
    return basis


def normal_form(vector: FreeElement, submodule: Submodule, order=None) -> FreeElement:
    source = submodule.with_order(order) if order is not None else submodule
    return source.normal_form(vector)
