import pytest

from algebra import Bidegree, CoefficientField, FreeModule, PolynomialRing, VariableSet, monomial_divides, monomials_of_degree
from groebner import DEGREE_SYMBOL, Grading, InhomogeneousError, PresentedModule, hilbert_data, monomial_numerator
from tests.conftest import make_ideal, make_ring


def _rees_ring():
    return PolynomialRing(CoefficientField.parse("32003"), VariableSet(("x",), ("w",), (1,)))


def _standard_monomial_count(ideal, nvars, degree):
    leads = [e for _, e in ideal.leading_terms()]
    return sum(1 for m in monomials_of_degree(nvars, degree)
               if not any(monomial_divides(lead, m) for lead in leads))


def test_monomial_numerator_of_complete_intersection():
    assert monomial_numerator([(2, 0), (0, 2)], (1, 1)) == {0: 1, 2: -2, 4: 1}
    assert monomial_numerator([], (1, 1)) == {0: 1}
    assert monomial_numerator([(0, 0)], (1, 1)) == {}


def test_artinian_quotient(ring2):
    data = hilbert_data(PresentedModule.quotient_ring(make_ideal(ring2, "x^2", "y^2")))
    assert data.values(0, 3) == [1, 2, 1, 0]
    assert data.polynomial_is_zero()
    assert data.last_nonzero_degree() == 2
    assert data.dimension == 0


def test_free_module_polynomial(ring3):
    data = hilbert_data(PresentedModule.free_module(FreeModule.of_rank(ring3, 1)))
    assert data.polynomial_value(3) == 10
    assert data.agreement_index == 0
    assert data.last_nonzero_degree() is None


def test_twisted_cubic():
    ring = make_ring("a,b,c,d")
    ideal = make_ideal(ring, "a*c - b^2", "b*d - c^2", "a*d - b*c")
    data = hilbert_data(PresentedModule.quotient_ring(ideal))
    assert data.values(0, 6) == [3 * n + 1 for n in range(7)]
    assert data.polynomial.expand() == (3 * DEGREE_SYMBOL + 1).expand()
    assert data.dimension == 2


@pytest.mark.parametrize("texts", [
    ("x^2 - y*z", "x*y - z^2", "x*z - y^2"),
    ("x^3", "x*y*z", "y^2*z^2"),
    ("x*y - z^2", "x^3 + y^3"),
])
def test_values_match_standard_monomial_count(ring3, texts):
    ideal = make_ideal(ring3, *texts)
    data = hilbert_data(PresentedModule.quotient_ring(ideal))
    for degree in range(9):
        assert data.value(degree) == _standard_monomial_count(ideal, 3, degree)


def test_shifted_free_summands(ring2):
    free = FreeModule(ring2, (Bidegree(0, 0), Bidegree(2, 0)))
    data = hilbert_data(PresentedModule.free_module(free))
    assert data.values(0, 3) == [1, 2, 4, 6]
    assert data.lowest_degree == 0


def test_rees_grading_counts_fiber_components():
    ring = _rees_ring()
    free = FreeModule.of_rank(ring, 1)
    module = PresentedModule.cokernel(free, [free.element([ring.parse("x")]), free.element([ring.parse("w^3")])])
    data = hilbert_data(module, Grading.REES)
    assert data.values(0, 4) == [1, 1, 1, 0, 0]
    assert data.last_nonzero_degree() == 2


def test_inhomogeneous_relation_rejected(ring2):
    with pytest.raises(InhomogeneousError):
        hilbert_data(PresentedModule.quotient_ring(make_ideal(ring2, "x - y^2")))
