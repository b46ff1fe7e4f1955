import random
from fractions import Fraction

import pytest

from algebra import CoefficientField, FieldError, FieldKind


def test_parse_specs():
    assert CoefficientField.parse("QQ").kind == FieldKind.RATIONALS
    assert CoefficientField.parse("p=7").modulus == 7
    assert CoefficientField.parse(32003).modulus == 32003
    assert str(CoefficientField.parse("31")) == "GF(31)"


def test_non_prime_modulus_rejected():
    with pytest.raises(FieldError):
        CoefficientField.parse("p=12")
    with pytest.raises(FieldError):
        CoefficientField.parse("reals")


def test_prime_field_arithmetic():
    f = CoefficientField.prime(7)
    assert f.element(Fraction(1, 2)) == 4
    assert f.mul(3, f.inv(3)) == 1
    assert f.add(5, 4) == 2
    assert f.neg(0) == 0
    assert f.format(6) == "-1"
    with pytest.raises(ZeroDivisionError):
        f.inv(0)
    with pytest.raises(FieldError):
        f.element(Fraction(1, 7))


def test_rational_arithmetic():
    f = CoefficientField.rationals()
    assert f.div(f.element(1), f.element(3)) == Fraction(1, 3)
    assert f.format(Fraction(-2, 3)) == "-2/3"


def _samples(field, rng, count=40):
    if field.is_prime_field:
        return [field.element(rng.randrange(field.modulus)) for _ in range(count)]
    return [field.element(Fraction(rng.randint(-50, 50), rng.randint(1, 30))) for _ in range(count)]


@pytest.mark.parametrize("spec", ["2", "7", "9973", "32003", "QQ"])
def test_field_axioms_on_random_elements(spec):
    field = CoefficientField.parse(spec)
    rng = random.Random(spec)
    values = _samples(field, rng)
    for a, b, c in zip(values, values[1:] + values[:1], values[2:] + values[:2]):
        assert field.add(a, b) == field.add(b, a)
        assert field.mul(a, b) == field.mul(b, a)
        assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
        assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
        assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
        assert field.add(a, field.neg(a)) == field.zero
        assert field.sub(a, b) == field.add(a, field.neg(b))
        assert field.mul(a, field.one) == a
        if a != field.zero:
            assert field.mul(a, field.inv(a)) == field.one
            assert field.mul(field.div(b, a), a) == b
