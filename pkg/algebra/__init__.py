"""Algebra substrate: fields, monomials, orders, polynomials and free modules."""
from .errors import AlgebraError, FieldError, ParseError, RingMismatchError, UnknownVariableError
from .field import CoefficientField, FieldKind, Scalar
from .free_module import FreeElement, FreeModule, bidegree_of
from .monomials import (
    Bidegree,
    Monomial,
    VariableSet,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    monomials_of_degree,
)
from .orders import (
    EliminationOrder,
    GrevlexOrder,
    ModuleOrder,
    MonomialOrder,
    PositionOverTerm,
    SchreyerOrder,
    TermOverPosition,
    WeightOverOrder,
    compare_monomials,
    compare_terms,
)
from .parsing import parse_polynomial
from .polynomial import Polynomial, PolynomialRing

__all__ = [
    "AlgebraError",
    "FieldError",
    "ParseError",
    "RingMismatchError",
    "UnknownVariableError",
    "CoefficientField",
    "FieldKind",
    "Scalar",
    "FreeElement",
    "FreeModule",
    "bidegree_of",
    "Bidegree",
    "Monomial",
    "VariableSet",
    "monomial_divides",
    "monomial_lcm",
    "monomial_mul",
    "monomials_of_degree",
    "EliminationOrder",
    "GrevlexOrder",
    "ModuleOrder",
    "MonomialOrder",
    "PositionOverTerm",
    "SchreyerOrder",
    "TermOverPosition",
    "WeightOverOrder",
    "compare_monomials",
    "compare_terms",
    "parse_polynomial",
    "Polynomial",
    "PolynomialRing",
]
