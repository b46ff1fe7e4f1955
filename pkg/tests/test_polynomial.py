import pytest

from algebra import (
    Bidegree,
    EliminationOrder,
    FreeModule,
    GrevlexOrder,
    ParseError,
    RingMismatchError,
    UnknownVariableError,
    VariableSet,
    compare_monomials,
    monomial_mul,
)
from algebra.monomials import monomials_of_degree
from algebra.polynomial import PolynomialRing
from tests.conftest import make_ring


def test_printing_uses_grevlex(ring3):
    p = ring3.parse("2*x*y + x^2")
    assert str(p) == "x^2 + 2*x*y"
    assert str(ring3.parse("x - y")) == "x - y"
    assert str(ring3.zero()) == "0"


def test_arithmetic(ring3):
    x, y, z = ring3.gens()
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert (x - x).is_zero()
    assert ring3.parse("(x+y)*(x-y)") == ring3.parse("x^2 - y^2")
    assert ring3.parse("3x y") == 3 * x * y


def test_bidegree(ring3):
    assert ring3.parse("x^2 + y*z").bidegree() == Bidegree(2, 0)
    assert ring3.parse("x + 1").bidegree() is None
    assert ring3.parse("x^2 + y^3").homogeneous_component(2) == ring3.parse("x^2")


def test_rees_variables_carry_their_degree():
    ring = make_ring("x,y")
    rees = PolynomialRing(ring.field, VariableSet(("x", "y"), ("w0",), (2,)))
    p = rees.parse("w0*y")
    assert p.bidegree() == Bidegree(3, 1)
    assert p.base_order() == 1


def test_parse_errors(ring3):
    with pytest.raises(UnknownVariableError):
        ring3.parse("x + w")
    with pytest.raises(ParseError):
        ring3.parse("x^2 +")
    with pytest.raises(ParseError) as excinfo:
        ring3.parse("x + y.subs(y, 1)")
    assert excinfo.value.offset == 5
    with pytest.raises(ParseError):
        ring3.parse("x*sin(y)")


def test_convert_between_rings(ring3):
    small = make_ring("x,y")
    p = small.parse("x*y - y^2")
    assert ring3.convert(p) == ring3.parse("x*y - y^2")


def test_monomials_of_degree_counts():
    assert len(list(monomials_of_degree(3, 2))) == 6
    assert list(monomials_of_degree(0, 0)) == [()]
    assert list(monomials_of_degree(0, 1)) == []


def test_free_module_elements(ring3):
    free = FreeModule(ring3, (Bidegree(0, 0), Bidegree(1, 0)))
    x, y, _ = ring3.gens()
    v = free.element([x * y, x])
    assert v.bidegree() == Bidegree(2, 0)
    assert (y * free.basis(1)).bidegree() == Bidegree(2, 0)
    assert (v - v).is_zero()
    assert str(v) == "[x*y, x]"


def test_grevlex_comparisons():
    order = GrevlexOrder((1, 1, 1))
    assert compare_monomials((2, 0, 0), (1, 1, 0), order) == 1
    assert compare_monomials((1, 1, 0), (1, 1, 0), order) == 0
    assert compare_monomials((1, 0, 1), (0, 2, 0), order) == -1
    assert compare_monomials((0, 0, 3), (1, 0, 0), order) == 1
    with pytest.raises(RingMismatchError):
        compare_monomials((1, 0), (0, 1, 0), order)


def test_elimination_block_dominates():
    # x, y, z, then w0, w1, w2 of weight 3 eliminated first
    order = EliminationOrder((3, 4, 5), (1, 1, 1, 3, 3, 3))
    assert compare_monomials((0, 0, 0, 1, 0, 0), (5, 0, 0, 0, 0, 0), order) == 1
    assert compare_monomials((0, 0, 1, 0, 0, 1), (0, 3, 0, 1, 0, 0), order) == -1


@pytest.mark.parametrize("order", [
    GrevlexOrder((1, 1, 1)),
    GrevlexOrder((1, 2, 3)),
    EliminationOrder((0,), (1, 1, 1)),
])
def test_orders_are_multiplicative(order):
    monomials = [m for d in range(3) for m in monomials_of_degree(3, d)]
    for a in monomials:
        for b in monomials:
            expected = compare_monomials(a, b, order)
            assert expected == -compare_monomials(b, a, order)
            assert (expected == 0) == (a == b)
            for c in monomials_of_degree(3, 1):
                assert compare_monomials(monomial_mul(a, c), monomial_mul(b, c), order) == expected
