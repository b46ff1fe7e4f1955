import pytest

from algebra import CoefficientField, FreeModule, PolynomialRing, VariableSet
from groebner import GroebnerError, InhomogeneousError, PresentedModule, Submodule, hilbert_data
from linearity import linearity_defect
from resolutions import BettiTable, free_resolution
from asymptotics import (
    NEG_INF,
    POS_INF,
    FiltrationCache,
    PowerKind,
    Variant,
    artin_rees_number,
    degree_json,
    detect_quasiperiod,
    detect_stable,
    flat_base_change_check,
    ideal_power,
    lind_sequence,
    module_power,
    persistence_degree,
    rees_component,
    rees_presentation,
    stability_threshold,
    tor_image,
)
from tests.conftest import make_ideal, make_ring


def _rees_line():
    """k[x][w] with w of bidegree (1, 1)."""
    return PolynomialRing(CoefficientField.parse("32003"), VariableSet(("x",), ("w",), (1,)))


def _cyclic(ring, *texts):
    free = FreeModule.of_rank(ring, 1)
    return PresentedModule.cokernel(free, [free.element([ring.parse(t)]) for t in texts])


def _kernel_ideal(presentation, *texts):
    ring = presentation.ring
    return Submodule.ideal(ring, [ring.parse(t) for t in texts])


def test_rees_kernel_of_maximal_ideal(ring2):
    presentation = rees_presentation(make_ideal(ring2, "x", "y"))
    assert presentation.ring.variables.rees_vars == ("w0", "w1")
    assert presentation.kernel.equals(_kernel_ideal(presentation, "w0*y - w1*x"))


def test_rees_kernel_of_principal_ideal(ring2):
    assert rees_presentation(make_ideal(ring2, "x")).kernel.is_zero()


def test_rees_kernel_of_three_generator_ideal(three_generator_ideal):
    presentation = rees_presentation(three_generator_ideal)
    assert presentation.ring.variables.rees_degrees == (2, 2, 2)
    expected = _kernel_ideal(presentation, "w0*y - w1*x", "w0*z^2 - w2*x^2", "w1*z^2 - w2*x*y")
    assert presentation.kernel.equals(expected)


def test_rees_kernel_vanishes_on_generator_products(three_generator_ideal):
    presentation = rees_presentation(three_generator_ideal)
    ring = presentation.ring
    images = list(ring.base_gens()) + [ring.convert(g) for g in presentation.generators]
    for relation in presentation.kernel.polynomials():
        assert relation.substitute(images).is_zero()


def test_rees_presentation_rejects_bad_ideals(ring2):
    with pytest.raises(GroebnerError):
        rees_presentation(make_ideal(ring2, "x", "1"))
    with pytest.raises(InhomogeneousError):
        rees_presentation(make_ideal(ring2, "x - y^2"))
    with pytest.raises(GroebnerError):
        rees_presentation(make_ideal(ring2, "x"), kind=PowerKind.QUOTIENT)


def test_rees_names_avoid_collisions():
    ring = PolynomialRing(CoefficientField.parse("32003"), VariableSet(("w0", "x")))
    presentation = rees_presentation(make_ideal(ring, "w0", "x"))
    assert presentation.ring.variables.rees_vars == ("u0", "u1")


def test_ideal_and_module_powers(ring3, three_generator_ideal):
    square = ideal_power(three_generator_ideal, 2)
    expected = make_ideal(ring3, "x^4", "x^3*y", "x^2*y^2", "x^2*z^2", "x*y*z^2", "z^4")
    assert square.equals(expected)
    assert len(square.generators) == 6
    assert module_power(three_generator_ideal, 2).free.rank == 6

    zeroth = module_power(three_generator_ideal, 0)
    assert zeroth.free.rank == 1
    assert zeroth.relations.is_zero()

    quotient = module_power(three_generator_ideal, 1, kind=PowerKind.QUOTIENT)
    direct = PresentedModule.quotient_ring(three_generator_ideal)
    assert hilbert_data(quotient).values(0, 6) == hilbert_data(direct).values(0, 6)

    with pytest.raises(ValueError):
        module_power(three_generator_ideal, -1)


def test_graded_piece_is_killed_by_the_ideal(ring2):
    piece = module_power(make_ideal(ring2, "x", "y"), 1, kind=PowerKind.GRADED_PIECE)
    assert hilbert_data(piece).values(0, 3) == [0, 2, 0, 0]


@pytest.mark.parametrize("n", [1, 2, pytest.param(3, marks=pytest.mark.slow)])
def test_rees_component_matches_module_power(three_generator_ideal, n):
    presentation = rees_presentation(three_generator_ideal)
    component = rees_component(presentation.module, n)
    direct = module_power(three_generator_ideal, n)
    assert hilbert_data(component).values(0, 8) == hilbert_data(direct).values(0, 8)
    assert linearity_defect(component) == linearity_defect(direct) == 1


def test_persistence_degrees():
    ring = _rees_line()
    assert persistence_degree(_cyclic(ring, "x", "w^3")) == 3
    assert persistence_degree(_cyclic(ring, "w")) == 1
    assert persistence_degree(_cyclic(ring, "1")) == NEG_INF
    assert persistence_degree(PresentedModule.free_module(FreeModule.of_rank(ring, 1))) == 0


def test_degree_json():
    assert degree_json(NEG_INF) == "-inf"
    assert degree_json(POS_INF) == "inf"
    assert degree_json(3) == 3


def test_artin_rees_number_of_principal_quadric(ring2):
    resolution = free_resolution(PresentedModule.quotient_ring(make_ideal(ring2, "x^2")))
    cache = FiltrationCache(resolution, 1)
    assert artin_rees_number(resolution, 1, cache=cache) == 2
    assert not all(cache.stable_at(1, q) for q in range(2, 5))


def test_artin_rees_number_of_linear_syzygy(ring2):
    presentation = rees_presentation(make_ideal(ring2, "x", "y"))
    resolution = free_resolution(presentation.module)
    assert artin_rees_number(resolution, 1) == 1
    assert tor_image(resolution, 1, 1).is_zero()
    assert tor_image(resolution, 2, 1).is_zero()
    with pytest.raises(ValueError):
        tor_image(resolution, 1, 0)


def test_certificate_of_maximal_ideal(ring2):
    presentation = rees_presentation(make_ideal(ring2, "x", "y"))
    certificate = stability_threshold(presentation, certify=True)
    assert certificate.pd == 1
    assert certificate.glind_bound == 2
    assert certificate.n0 == 0
    assert certificate.threshold == 0
    level = certificate.level(1)
    assert level.artin_rees == 1
    assert level.persistence == [NEG_INF]
    assert level.reading.m_adic == 1
    assert level.reading.rees == POS_INF
    data = certificate.to_dict()
    assert data["N"] == 0
    assert data["perLevel"][0]["c"] == ["-inf"]
    assert data["perLevel"][0]["initialFormsAgree"] is True


def test_certificate_of_free_and_zero_modules():
    ring = _rees_line()
    free = stability_threshold(PresentedModule.free_module(FreeModule.of_rank(ring, 1)))
    assert free.levels == []
    assert free.threshold == 0
    zero = stability_threshold(_cyclic(ring, "1"))
    assert zero.threshold == NEG_INF
    assert zero.to_dict()["N"] == "-inf"


def test_flat_base_change(ring2):
    presentation = rees_presentation(make_ideal(ring2, "x", "y"))
    assert flat_base_change_check(presentation, 1, 1, 2) == (2, 2)
    over_r, over_s = flat_base_change_check(presentation, 1, 2, 2)
    assert over_r == over_s


@pytest.mark.slow
def test_three_generator_certificate(three_generator_ideal):
    presentation = rees_presentation(three_generator_ideal)
    resolution = free_resolution(presentation.module)
    assert resolution.length == 2
    table = BettiTable.from_resolution(resolution)
    assert sorted(s.rees for s in table.shifts(2)) == [1, 2]

    certificate = stability_threshold(presentation, glind_bound=3)
    assert certificate.pd == 2
    assert certificate.n0 == 0
    assert certificate.level(1).artin_rees == 2
    assert certificate.level(1).persistence == [1, 1]
    assert certificate.level(2).artin_rees == 1
    assert certificate.level(2).value == NEG_INF
    assert certificate.threshold == 1
    assert certificate.to_dict()["perLevel"][1]["n"] == "-inf"


@pytest.mark.slow
def test_three_generator_tor_image(three_generator_ideal):
    resolution = free_resolution(rees_presentation(three_generator_ideal).module)
    image = tor_image(resolution, 1, 1)
    assert not image.is_zero()
    assert persistence_degree(image) == 1
    assert tor_image(resolution, 2, 1).is_zero()
    assert tor_image(resolution, 3, 1).is_zero()


@pytest.mark.slow
@pytest.mark.parametrize("i,q,n", [(1, 1, 1), (1, 2, 2), (2, 2, 1)])
def test_three_generator_flat_base_change(three_generator_ideal, i, q, n):
    over_r, over_s = flat_base_change_check(rees_presentation(three_generator_ideal), i, q, n)
    assert over_r == over_s


@pytest.mark.slow
def test_three_generator_power_sequence(three_generator_ideal):
    report = lind_sequence(three_generator_ideal, 4, threshold=True)
    assert report.values == {1: 1, 2: 1, 3: 1, 4: 1}
    assert (report.stable_value, report.stabilization_index) == (1, 1)
    assert report.certificate.threshold == 1


@pytest.mark.slow
def test_three_generator_quotient_sequence(three_generator_ideal):
    report = lind_sequence(three_generator_ideal, 3, Variant.QUOTIENT)
    assert report.values[2] == report.values[3] == 2
    assert report.extras["mappingCone"]["2"] == {"predicted": 2, "agrees": True}


def test_power_sequence_of_maximal_ideal(ring2):
    report = lind_sequence(make_ideal(ring2, "x", "y"), 3, threshold=True, certify=True)
    assert report.values == {1: 0, 2: 0, 3: 0}
    assert (report.stable_value, report.stabilization_index) == (0, 1)
    assert report.quasiperiod is None
    assert report.certificate.threshold == 0
    assert report.to_dict()["values"] == {"1": 0, "2": 0, "3": 0}


def test_quotient_sequence_with_mapping_cone(ring2):
    report = lind_sequence(make_ideal(ring2, "x", "y"), 3, Variant.QUOTIENT, workers=2)
    assert report.values == {1: 0, 2: 1, 3: 1}
    assert (report.stable_value, report.stabilization_index) == (1, 2)
    cone = report.extras["mappingCone"]
    assert cone["1"] == {"liftingFailsAt": 0}
    assert cone["2"] == {"predicted": 1, "agrees": True}
    assert cone["3"] == {"predicted": 1, "agrees": True}


def test_graded_piece_sequence(ring2):
    report = lind_sequence(make_ideal(ring2, "x", "y"), 2, Variant.GRADED_PIECE, threshold=True)
    assert report.values == {1: 0, 2: 0}
    assert report.certificate is not None


def test_saturation_power_sequence(ring2):
    report = lind_sequence(make_ideal(ring2, "x^2", "x*y"), 2, Variant.SATURATION_POWER)
    assert report.values == {1: 0, 2: 0}
    assert report.extras["minimalDegrees"] == {"1": 1, "2": 2}
    assert report.certificate is None


def test_timed_out_entries_are_recorded(three_generator_ideal):
    report = lind_sequence(three_generator_ideal, 1, timeout_seconds=1e-9)
    assert report.values == {1: None}
    assert report.timed_out == [1]
    assert report.stable_value is None
    assert report.to_dict()["timedOut"] == [1]


def test_sequence_needs_a_positive_range(ring2):
    with pytest.raises(ValueError):
        lind_sequence(make_ideal(ring2, "x"), 0)


def test_detect_stable():
    assert detect_stable({1: 1, 2: 1, 3: 1, 4: 1}) == (1, 1)
    assert detect_stable({1: 0, 2: 1, 3: 1}) == (1, 2)
    assert detect_stable({1: 0, 2: 1}) == (None, None)
    assert detect_stable({1: 1, 2: None, 3: 1}) == (None, None)


def test_detect_quasiperiod():
    found = detect_quasiperiod({1: 2, 2: 0, 3: 1, 4: 0, 5: 1})
    assert (found.period, found.start, found.pattern) == (2, 2, [0, 1])
    assert detect_quasiperiod({1: 1, 2: 1, 3: 1, 4: 1}) is None
    assert detect_quasiperiod({1: 0, 2: 1, 3: 0}) is None


POWER_CORPUS = [
    ("x,y", ("x", "y")),
    ("x,y", ("x^2", "y^2")),
    ("x,y", ("x^2", "x*y")),
    ("x,y", ("x^2", "x*y", "y^2")),
    ("x,y", ("x^3", "y^3")),
    ("x,y", ("x^2", "y^3")),
    ("x,y", ("x^2 - y^2", "x*y")),
    ("x,y,z", ("x*y", "y*z", "x*z")),
    ("x,y,z", ("x^2", "y^2", "z^2")),
    ("x,y,z", ("x*y", "z^2")),
    ("x,y,z", ("x^2 - y*z",)),
]


@pytest.mark.slow
@pytest.mark.parametrize("names,generators", POWER_CORPUS)
def test_lind_of_powers_is_constant_past_threshold(names, generators):
    ideal = make_ideal(make_ring(names), *generators)
    threshold = stability_threshold(rees_presentation(ideal)).threshold
    start = max(1, threshold)
    values = {linearity_defect(module_power(ideal, n)) for n in range(start, start + 4)}
    assert len(values) == 1
