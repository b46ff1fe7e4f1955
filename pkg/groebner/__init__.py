"""Gröbner engine for graded submodules and presented modules."""
from .buchberger import Buchberger, GroebnerRun
from .errors import ComputationLimitError, GroebnerError, InhomogeneousError
from .hilbert import DEGREE_SYMBOL, Grading, HilbertData, hilbert_data, monomial_numerator
from .limits import ComputationLimits, computation_limits
from .operations import (
    eliminate,
    groebner_basis,
    intersect,
    linear_combination,
    maximal_ideal_power,
    normal_form,
    power_generators,
    quotient,
    quotient_by_element,
    saturation,
    scale_submodule,
)
from .submodule import PresentedModule, Submodule, select_minimal

__all__ = [
    "Buchberger",
    "GroebnerRun",
    "ComputationLimitError",
    "GroebnerError",
    "InhomogeneousError",
    "DEGREE_SYMBOL",
    "Grading",
    "HilbertData",
    "hilbert_data",
    "monomial_numerator",
    "ComputationLimits",
    "computation_limits",
    "eliminate",
    "groebner_basis",
    "intersect",
    "linear_combination",
    "maximal_ideal_power",
    "normal_form",
    "power_generators",
    "quotient",
    "quotient_by_element",
    "saturation",
    "scale_submodule",
    "PresentedModule",
    "Submodule",
    "select_minimal",
]
