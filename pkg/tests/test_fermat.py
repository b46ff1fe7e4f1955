"""The Fermat configuration of twelve points: saturated powers and their linearity defect."""
import pytest

from groebner import PresentedModule, maximal_ideal_power, quotient, saturation
from linearity import ideal_linearity_defect, is_componentwise_linear
from asymptotics import Variant, ideal_power, lind_sequence
from tests.conftest import make_ideal, make_ring

FERMAT = ("x*(y^3-z^3)", "y*(x^3-z^3)", "z*(x^3-y^3)")

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def fermat_ring():
    # 9973 = 1 mod 3: the field holds the cube roots of unity
    return make_ring(field="9973")


def _saturated_power(ring, n):
    power = ideal_power(make_ideal(ring, *FERMAT), n)
    return saturation(power, maximal_ideal_power(ring, 1)).minimal_generators()


def test_fermat_ideal_is_saturated_over_rationals():
    ring = make_ring(field="QQ")
    ideal = make_ideal(ring, *FERMAT)
    assert saturation(ideal, maximal_ideal_power(ring, 1)).equals(ideal)


def test_fermat_ideal_is_not_componentwise_linear(fermat_ring):
    ideal = make_ideal(fermat_ring, *FERMAT)
    assert not is_componentwise_linear(ideal)
    assert ideal_linearity_defect(ideal) >= 1


def test_third_saturated_power(fermat_ring):
    saturated = _saturated_power(fermat_ring, 3)
    cube = ideal_power(make_ideal(fermat_ring, *FERMAT), 3)
    assert cube.is_subset(saturated)
    product = fermat_ring.parse("(x^3-y^3)*(y^3-z^3)*(z^3-x^3)")
    assert saturated.contains(saturated.ambient.element([product]))
    assert quotient(saturated, maximal_ideal_power(fermat_ring, 1)).equals(saturated)
    assert ideal_linearity_defect(saturated) == 0


def test_fourth_saturated_power(fermat_ring):
    saturated = _saturated_power(fermat_ring, 4)
    assert min(g.internal_degree() for g in saturated.generators) == 13
    assert ideal_linearity_defect(saturated) == 1
    assert not PresentedModule.from_submodule(saturated).is_zero()


@pytest.mark.parametrize("n,expected", [(3, 0), (4, 1)])
def test_saturated_powers_over_rationals(n, expected):
    assert ideal_linearity_defect(_saturated_power(make_ring(field="QQ"), n)) == expected


def test_saturated_power_sequence_is_quasiperiodic(fermat_ring):
    report = lind_sequence(make_ideal(fermat_ring, *FERMAT), 7, Variant.SATURATION_POWER,
                           timeout_seconds=1800)
    assert report.timed_out == []
    assert report.values == {1: 1, 2: 0, 3: 0, 4: 1, 5: 0, 6: 0, 7: 1}
    assert report.stable_value is None
    assert report.quasiperiod.period == 3
    assert report.quasiperiod.start == 1
    assert report.quasiperiod.pattern == [1, 0, 0]
