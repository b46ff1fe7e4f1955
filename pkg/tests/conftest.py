"""Shared rings and ideals."""
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from algebra import CoefficientField, FreeModule, PolynomialRing, VariableSet  # noqa: E402
from groebner import PresentedModule, Submodule  # noqa: E402


def make_ring(names="x,y,z", field="32003") -> PolynomialRing:
    return PolynomialRing(CoefficientField.parse(field), VariableSet(tuple(names.split(","))))


def make_ideal(ring: PolynomialRing, *texts: str) -> Submodule:
    return Submodule.ideal(ring, [ring.parse(t) for t in texts])


def make_module(names: str, kind: str, *texts) -> PresentedModule:
    """R/I for kind "quotient", I itself for "ideal", or the cokernel of the rows for "module"."""
    ring = make_ring(names)
    if kind == "module":
        free = FreeModule.of_rank(ring, len(texts[0]))
        return PresentedModule.cokernel(free, [free.element([ring.parse(t) for t in row]) for row in texts])
    ideal = make_ideal(ring, *texts)
    if kind == "quotient":
        return PresentedModule.quotient_ring(ideal)
    return PresentedModule.from_submodule(ideal)


@pytest.fixture
def ring3():
    return make_ring()


@pytest.fixture
def ring2():
    return make_ring("x,y")


@pytest.fixture
def three_generator_ideal(ring3):
    """(x^2, xy, z^2): every power has linearity defect 1."""
    return make_ideal(ring3, "x^2", "x*y", "z^2")
