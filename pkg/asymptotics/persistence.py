"""Persistence degree of bigraded modules over a Rees ring."""
import logging
import math
from typing import Union

import sympy

from groebner.hilbert import DEGREE_SYMBOL, Grading, HilbertData, hilbert_data
from groebner.submodule import PresentedModule

logger = logging.getLogger(__name__)

NEG_INF = float("-inf")
POS_INF = float("inf")

Degree = Union[int, float]


def fiber_module(module: PresentedModule) -> PresentedModule:
    """C / mC for m generated by the base variables."""
    free = module.free
    ring = module.ring
    extra = [x * free.basis(k) for x in ring.base_gens() for k in range(free.rank)]
    return module.with_relations(extra)


def fiber_hilbert(module: PresentedModule) -> HilbertData:
    """Rees-graded Hilbert data of C / mC; its degree-n value is the number of generators of C_n."""
    return hilbert_data(fiber_module(module), Grading.REES)


def _root_bound(polynomial: sympy.Expr) -> int:
    """Every integer root of the polynomial has absolute value at most this."""
    coeffs = sympy.Poly(polynomial, DEGREE_SYMBOL).all_coeffs()
    lead = abs(coeffs[0])
    return int(math.ceil(1 + max((abs(c) / lead for c in coeffs[1:]), default=0)))


def persistence_degree(module: PresentedModule) -> Degree:
    """
    The least p with C_n = 0 for all n >= p or C_n != 0 for all n >= p.

    By graded Nakayama C_n = 0 exactly when (C/mC)_n = 0, so the answer is
    read off the Rees-graded Hilbert function of C/mC: past the agreement
    index it equals the Hilbert polynomial, whose integer roots are bounded.

    Returns:
        An integer, or -inf for the zero module
    """
    data = fiber_hilbert(module)
    if data.is_zero():
        return NEG_INF
    if data.polynomial_is_zero():
        value = data.last_nonzero_degree() + 1
        logger.debug("Finite-length fiber, last nonzero degree %d", value - 1)
        return value
    lo = data.lowest_degree
    hi = max(data.agreement_index, _root_bound(data.polynomial))
    zeros = [n for n in range(lo, hi + 1) if data.value(n) == 0]
    return zeros[-1] + 1 if zeros else lo


def degree_json(value: Degree):
    """Integers stay integers; infinities become the strings "-inf" and "inf"."""
    if value == NEG_INF:
        return "-inf"
    if value == POS_INF:
        return "inf"
    return int(value)
