import pytest
from sympy import groebner, symbols

from algebra import FreeModule, monomial_lcm
from algebra.monomials import monomial_div
from algebra.parsing import expression_to_polynomial, parse_expression
from groebner import (
    ComputationLimitError,
    PresentedModule,
    Submodule,
    computation_limits,
    eliminate,
    intersect,
    linear_combination,
    maximal_ideal_power,
    power_generators,
    quotient,
    saturation,
)
from tests.conftest import make_ideal, make_ring


def _monic_set(polys):
    return {p.monic() for p in polys}


@pytest.mark.parametrize("texts", [
    ("x^2 - y*z", "x*y - z^2", "x*z - y^2"),
    ("x^3 - y*z^2", "y^2*z - x*z^2", "x*y*z"),
    ("x*(y^3-z^3)", "y*(x^3-z^3)", "z*(x^3-y^3)"),
    ("x^2 + 3*x*y + y^2", "x*y*z"),
])
def test_groebner_basis_matches_sympy(ring3, texts):
    ideal = make_ideal(ring3, *texts)
    ours = _monic_set(g.component(0) for g in ideal.groebner_basis())
    names = ("x", "y", "z")
    reference = groebner([parse_expression(t, names) for t in texts], *symbols("x y z"),
                         order="grevlex", modulus=32003)
    theirs = _monic_set(expression_to_polynomial(e, ring3) for e in reference.exprs)
    assert ours == theirs


def test_generators_reduce_to_zero(ring3):
    ideal = make_ideal(ring3, "x^2 - y*z", "x*y - z^2", "x*z - y^2")
    for g in ideal.generators:
        assert ideal.normal_form(g).is_zero()


def test_membership(ring3, three_generator_ideal):
    free = three_generator_ideal.ambient
    assert three_generator_ideal.contains(free.element([ring3.parse("x^3*y + z^2*y")]))
    assert not three_generator_ideal.contains(free.element([ring3.parse("y^2")]))


def test_koszul_syzygy(ring2):
    ideal = make_ideal(ring2, "x", "y")
    syz = ideal.syzygies()
    assert len(syz.generators) == 1
    relation = syz.generators[0]
    assert relation.internal_degree() == 2
    assert linear_combination(relation, ideal.generators, ideal.ambient).is_zero()


def test_syzygies_of_three_generator_ideal(three_generator_ideal):
    syz = three_generator_ideal.syzygies()
    degrees = sorted(g.internal_degree() for g in syz.generators)
    assert degrees == [3, 4, 4]
    for g in syz.generators:
        assert linear_combination(g, three_generator_ideal.generators, three_generator_ideal.ambient).is_zero()


def test_lift(three_generator_ideal, ring3):
    free = three_generator_ideal.ambient
    target = free.element([ring3.parse("x^2*z + x*y*z - z^3")])
    u = three_generator_ideal.lift(target)
    assert u is not None
    assert linear_combination(u, three_generator_ideal.generators, free) == target
    assert three_generator_ideal.lift(free.element([ring3.parse("y^2")])) is None


def test_minimal_generators_drop_redundant(ring3):
    ideal = make_ideal(ring3, "x^2", "x^2*y", "x*y", "x^2 + x*y")
    assert [str(p) for p in ideal.minimal_generators().polynomials()] == ["x^2", "x*y"]


def test_intersection_and_quotient(ring2):
    meet = intersect(make_ideal(ring2, "x"), make_ideal(ring2, "y"))
    assert meet.equals(make_ideal(ring2, "x*y"))

    colon = quotient(make_ideal(ring2, "x^2", "x*y"), [ring2.parse("x")])
    assert colon.equals(make_ideal(ring2, "x", "y"))


def test_saturation_by_maximal_ideal(ring2):
    ideal = make_ideal(ring2, "x^2", "x*y")
    saturated = saturation(ideal, maximal_ideal_power(ring2, 1))
    assert saturated.equals(make_ideal(ring2, "x"))


def test_saturation_of_saturated_ideal_is_unchanged(ring3):
    ideal = make_ideal(ring3, "x*y", "z")
    assert saturation(ideal, maximal_ideal_power(ring3, 1)).equals(ideal)


def test_elimination():
    ring = make_ring("t,x,y,z")
    ideal = make_ideal(ring, "t*x - y^2", "t - z")
    eliminated = eliminate(ideal, ["x", "y", "z"])
    target_ring = eliminated.ring
    assert target_ring.variables.names == ("x", "y", "z")
    assert eliminated.equals(Submodule.ideal(target_ring, [target_ring.parse("x*z - y^2")]))


def test_power_generators(three_generator_ideal, ring3):
    square = power_generators(three_generator_ideal.polynomials(), 2)
    expected = {ring3.parse(t) for t in ("x^4", "x^3*y", "x^2*y^2", "x^2*z^2", "x*y*z^2", "z^4")}
    assert set(square) == expected
    assert len(square) == len(expected)
    assert power_generators(three_generator_ideal.polynomials(), 0) == [ring3.one()]


def test_submodule_as_module(ring2):
    free = FreeModule.of_rank(ring2, 2)
    x, y = ring2.gens()
    sub = Submodule(free, [free.element([x, 0]), free.element([y, 0]), free.element([0, x])])
    presented = PresentedModule.from_submodule(sub)
    assert presented.free.rank == 3
    assert len(presented.relations.generators) == 1
    assert not presented.is_zero()


def test_pair_cap(ring3):
    ideal = make_ideal(ring3, "x^2 - y*z", "x*y - z^2", "x*z - y^2")
    with computation_limits(max_pairs=1):
        with pytest.raises(ComputationLimitError):
            ideal.groebner_basis()


def _s_pairs(submodule):
    """S-vectors of every pair of Gröbner basis elements with leads in the same position."""
    basis = submodule.groebner_basis()
    leads = submodule.leading_terms()
    field_ = submodule.ring.field
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            (pos_a, exps_a), (pos_b, exps_b) = leads[a], leads[b]
            if pos_a != pos_b:
                continue
            lcm = monomial_lcm(exps_a, exps_b)
            left = basis[a].mul_term(monomial_div(lcm, exps_a), field_.inv(basis[a].terms[leads[a]]))
            right = basis[b].mul_term(monomial_div(lcm, exps_b), field_.inv(basis[b].terms[leads[b]]))
            yield left - right


@pytest.mark.parametrize("names,texts", [
    ("x,y", ("x^2 - y", "y^2 - x")),
    ("x,y,z", ("x^2", "x*y", "z^2")),
    ("x,y,z", ("x^2 - y*z", "x*y - z^2", "x*z - y^2")),
    ("x,y,z", ("x^3 - y*z^2", "y^2*z - x*z^2", "x*y*z")),
    ("x,y,z", ("x*(y^3-z^3)", "y*(x^3-z^3)", "z*(x^3-y^3)")),
    ("t,x,y,z", ("t*x - y^2", "t - z")),
])
def test_every_s_pair_reduces_to_zero(names, texts):
    ideal = make_ideal(make_ring(names), *texts)
    pairs = list(_s_pairs(ideal))
    assert all(ideal.normal_form(s).is_zero() for s in pairs)


def test_module_s_pairs_reduce_to_zero(ring2):
    free = FreeModule.of_rank(ring2, 2)
    x, y = ring2.gens()
    sub = Submodule(free, [free.element([x * x, y * y]), free.element([x * y, x * x]), free.element([y * y, x * y])])
    assert all(sub.normal_form(s).is_zero() for s in _s_pairs(sub))


def test_normal_form_examples(ring2):
    ideal = make_ideal(ring2, "x^2 - y")
    free = ideal.ambient
    assert ideal.normal_form(free.element([ring2.parse("x^2*y")])) == free.element([ring2.parse("y^2")])
    assert ideal.normal_form(ideal.generators[0]).is_zero()


@pytest.mark.parametrize("text", ["x^3*y + y^4 - z^4", "x^2*y*z + 7*y^3", "z^5 + x*y^2*z^2 - x^4*z"])
def test_normal_form_is_idempotent(ring3, text):
    ideal = make_ideal(ring3, "x^2 - y*z", "x*y - z^2", "x*z - y^2")
    v = ideal.ambient.element([ring3.parse(text)])
    remainder = ideal.normal_form(v)
    assert ideal.normal_form(remainder) == remainder
    assert ideal.contains(v - remainder)
    leads = [exps for _, exps in ideal.leading_terms()]
    for _, exps in remainder.terms:
        assert not any(all(a <= b for a, b in zip(lead, exps)) for lead in leads)
