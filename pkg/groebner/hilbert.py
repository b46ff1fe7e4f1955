"""Hilbert series, functions and polynomials of graded presented modules.

The series numerator of a monomial quotient is computed with the pivot
recursion N(J) = N(J + (p)) + t^deg(p) N(J : p), stopping when the
generators have pairwise disjoint supports.
"""
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from algebra.monomials import Monomial, monomial_divides

from .errors import GroebnerError, InhomogeneousError
from .submodule import PresentedModule

Series = Dict[int, int]

DEGREE_SYMBOL = sympy.Symbol("n", integer=True)


class Grading(str, Enum):
    """Which degree the Hilbert function counts."""
    INTERNAL = "internal"
    REES = "rees"


def _add(a: Series, b: Series, scale: int = 1, shift: int = 0) -> Series:
    result = dict(a)
    for d, c in b.items():
        value = result.get(d + shift, 0) + scale * c
        if value:
            result[d + shift] = value
        else:
            result.pop(d + shift, None)
    return result


def _mul(a: Series, b: Series) -> Series:
    result: Series = {}
    for d1, c1 in a.items():
        for d2, c2 in b.items():
            result[d1 + d2] = result.get(d1 + d2, 0) + c1 * c2
    return {d: c for d, c in result.items() if c}


def _minimalize(gens: Sequence[Monomial]) -> List[Monomial]:
    unique = sorted(set(gens), key=sum)
    kept: List[Monomial] = []
    for g in unique:
        if not any(monomial_divides(h, g) for h in kept):
            kept.append(g)
    return kept


def _weighted(exps: Monomial, weights: Sequence[int]) -> int:
    return sum(e * w for e, w in zip(exps, weights))


def monomial_numerator(gens: Sequence[Monomial], weights: Tuple[int, ...]) -> Series:
    """
    Numerator of the Hilbert series of k[vars]/J for a monomial ideal J,
    over the denominator prod_i (1 - t^weights[i]).
    """
    gens = _minimalize(gens)
    if not gens:
        return {0: 1}
    if any(not any(g) for g in gens):
        return {}
    support_union = set()
    disjoint = True
    for g in gens:
        support = {i for i, e in enumerate(g) if e}
        if support & support_union:
            disjoint = False
            break
        support_union |= support
    if disjoint:
        result: Series = {0: 1}
        for g in gens:
            result = _mul(result, {0: 1, _weighted(g, weights): -1})
        return result

    counts = [sum(1 for g in gens if g[i]) for i in range(len(weights))]
    var = max(range(len(weights)), key=lambda i: counts[i])
    power = min(g[var] for g in gens if g[var])
    pivot = tuple(power if i == var else 0 for i in range(len(weights)))
    with_pivot = monomial_numerator(list(gens) + [pivot], weights)
    colon = [tuple(max(e - p, 0) for e, p in zip(g, pivot)) for g in gens]
    return _add(with_pivot, monomial_numerator(colon, weights), shift=_weighted(pivot, weights))


@lru_cache(maxsize=None)
def _monomial_count(weights: Tuple[int, ...], degree: int) -> int:
    if degree < 0:
        return 0
    if not weights:
        return 1 if degree == 0 else 0
    if all(w == 1 for w in weights):
        return comb(degree + len(weights) - 1, len(weights) - 1)
    head, tail = weights[0], weights[1:]
    return sum(_monomial_count(tail, degree - k * head) for k in range(degree // head + 1))


def _reduce_by_one_minus_t(numerator: Series, dimension: int) -> Tuple[Series, int]:
    while numerator and dimension > 0 and sum(numerator.values()) == 0:
        lo, hi = min(numerator), max(numerator)
        running = 0
        reduced: Series = {}
        for d in range(lo, hi):
            running += numerator.get(d, 0)
            if running:
                reduced[d] = running
        numerator, dimension = reduced, dimension - 1
    return numerator, dimension


@dataclass(frozen=True)
class HilbertData:
    """
    Hilbert series N(t) / prod(1 - t^w) and, for standard gradings, the
    reduced form, the Hilbert polynomial and the agreement index.
    """
    grading: Grading
    numerator: Tuple[Tuple[int, int], ...]
    weights: Tuple[int, ...]
    lowest_degree: int
    reduced_numerator: Optional[Tuple[Tuple[int, int], ...]] = None
    dimension: Optional[int] = None
    polynomial: Optional[sympy.Expr] = field(default=None, compare=False)
    agreement_index: Optional[int] = None

    def is_zero(self) -> bool:
        return not self.numerator

    def value(self, n: int) -> int:
        """Dimension of the degree-n component."""
        return sum(c * _monomial_count(self.weights, n - d) for d, c in self.numerator)

    def values(self, lo: int, hi: int) -> List[int]:
        return [self.value(n) for n in range(lo, hi + 1)]

    def polynomial_value(self, n: int) -> int:
        if self.polynomial is None:
            raise GroebnerError("Hilbert polynomial only exists for standard gradings")
        return int(self.polynomial.subs(DEGREE_SYMBOL, n))

    def polynomial_is_zero(self) -> bool:
        return self.polynomial is not None and sympy.expand(self.polynomial) == 0

    def last_nonzero_degree(self) -> Optional[int]:
        """Top degree of a finite-length module (zero Hilbert polynomial)."""
        if not self.polynomial_is_zero() or not self.reduced_numerator:
            return None
        return max(d for d, c in self.reduced_numerator if c)


def _hilbert_polynomial(numerator: Series, dimension: int) -> sympy.Expr:
    if dimension == 0 or not numerator:
        return sympy.Integer(0)
    n = DEGREE_SYMBOL
    total = sympy.Integer(0)
    for j, q in numerator.items():
        term = sympy.Integer(q)
        for i in range(1, dimension):
            term *= (n - j + i)
        total += term / sympy.factorial(dimension - 1)
    return sympy.expand(total)


def hilbert_data(module: PresentedModule, grading: Grading = Grading.INTERNAL) -> HilbertData:
    """
    Hilbert series of a graded presented module.

    For the Rees grading the module must be killed by the base variables,
    so each Rees-degree component is finite-dimensional.

    Raises:
        InhomogeneousError: if a relation is not homogeneous for the grading
        GroebnerError: if a Rees-graded component would be infinite
    """
    variables = module.ring.variables
    relations = module.relations
    for g in relations.generators:
        if g.is_zero():
            continue
        if grading == Grading.INTERNAL and g.internal_degree() is None:
            raise InhomogeneousError(f"Relation {g} is not homogeneous")
        if grading == Grading.REES and g.bidegree() is None:
            raise InhomogeneousError(f"Relation {g} is not bihomogeneous")

    leads = relations.leading_terms()
    rank = module.free.rank
    if grading == Grading.INTERNAL:
        active = list(range(variables.nvars))
        weights = variables.internal_weights
        shifts = [s.internal for s in module.free.shifts]
    else:
        active = list(variables.rees_indices)
        weights = tuple(1 for _ in active)
        shifts = [s.rees for s in module.free.shifts]
        base = list(variables.base_indices)
        for k in range(rank):
            position = [e for p, e in leads if p == k]
            if any(not any(e) for e in position):
                continue
            for i in base:
                if not any(e[i] <= 1 and all(e[j] == 0 for j in range(len(e)) if j != i) for e in position):
                    raise GroebnerError("Rees-graded Hilbert data needs a module killed by the base variables")

    weights = tuple(weights[i] for i in active) if grading == Grading.INTERNAL else weights
    numerator: Series = {}
    for k in range(rank):
        gens = []
        for p, e in leads:
            if p != k:
                continue
            if grading == Grading.REES and any(e[i] for i in variables.base_indices):
                continue
            gens.append(tuple(e[i] for i in active))
        numerator = _add(numerator, monomial_numerator(gens, weights), shift=shifts[k])

    lowest = min(shifts) if shifts else 0
    data = dict(
        grading=grading,
        numerator=tuple(sorted(numerator.items())),
        weights=weights,
        lowest_degree=lowest,
    )
    if all(w == 1 for w in weights):
        reduced, dimension = _reduce_by_one_minus_t(dict(numerator), len(weights))
        if not reduced:
            dimension = 0
        polynomial = _hilbert_polynomial(reduced, dimension)
        partial = HilbertData(**data, reduced_numerator=tuple(sorted(reduced.items())),
                              dimension=dimension, polynomial=polynomial)
        start = max(lowest, (max(reduced) if reduced else lowest) - dimension + 1)
        while start > lowest and partial.value(start - 1) == partial.polynomial_value(start - 1):
            start -= 1
        return HilbertData(**data, reduced_numerator=partial.reduced_numerator, dimension=dimension,
                           polynomial=polynomial, agreement_index=start)
    return HilbertData(**data)
