"""Exact coefficient fields: prime fields F_p and the rationals."""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from sympy import isprime
from sympy.polys.domains import GF, QQ

from .errors import FieldError

Scalar = Union[int, Fraction]

DEFAULT_MODULUS = 32003


class FieldKind(str, Enum):
    """Supported coefficient fields."""
    PRIME = "prime-field"
    RATIONALS = "rationals"


@dataclass(frozen=True)
class CoefficientField:
    """Exact arithmetic carrier.

    Elements of a prime field are plain ints in [0, p); elements of the
    rationals are ``Fraction`` instances.
    """
    kind: FieldKind = FieldKind.PRIME
    modulus: int = DEFAULT_MODULUS

    def __post_init__(self):
        if self.kind == FieldKind.PRIME:
            if not isprime(self.modulus):
                raise FieldError(f"Modulus {self.modulus} is not prime")
        else:
            object.__setattr__(self, "modulus", 0)

    @classmethod
    def prime(cls, modulus: int = DEFAULT_MODULUS) -> "CoefficientField":
        return cls(FieldKind.PRIME, int(modulus))

    @classmethod
    def rationals(cls) -> "CoefficientField":
        return cls(FieldKind.RATIONALS, 0)

    @classmethod
    def parse(cls, spec: Union[str, int]) -> "CoefficientField":
        """
        Build a field from a textual spec.

        Args:
            spec: "QQ" for the rationals, otherwise a prime ("32003" or "p=32003")

        Returns:
            The coefficient field
        """
        text = str(spec).strip()
        if text.upper() == "QQ":
            return cls.rationals()
        if text.lower().startswith("p="):
            text = text[2:]
        try:
            modulus = int(text)
        except ValueError:
            raise FieldError(f"Unrecognized field spec: {spec!r}")
        return cls.prime(modulus)

    @property
    def is_prime_field(self) -> bool:
        return self.kind == FieldKind.PRIME

    @property
    def zero(self) -> Scalar:
        return 0 if self.is_prime_field else Fraction(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.is_prime_field else Fraction(1)

    def element(self, value) -> Scalar:
        """Coerce an int, Fraction or numeric string into the field."""
        if self.is_prime_field:
            if isinstance(value, Fraction):
                if value.denominator % self.modulus == 0:
                    raise FieldError(f"{value} has no image in GF({self.modulus})")
                return value.numerator * pow(value.denominator, -1, self.modulus) % self.modulus
            return int(value) % self.modulus
        return Fraction(value)

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        if self.is_prime_field:
            return (a + b) % self.modulus
        return a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        if self.is_prime_field:
            return (a - b) % self.modulus
        return a - b

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        if self.is_prime_field:
            return a * b % self.modulus
        return a * b

    def neg(self, a: Scalar) -> Scalar:
        if self.is_prime_field:
            return -a % self.modulus
        return -a

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise ZeroDivisionError("Inverse of zero")
        if self.is_prime_field:
            return pow(a, -1, self.modulus)
        return 1 / a

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def to_domain(self):
        """The matching sympy domain, used for exact matrix computations."""
        return GF(self.modulus) if self.is_prime_field else QQ

    def to_domain_element(self, value: Scalar, domain=None):
        domain = domain if domain is not None else self.to_domain()
        if self.is_prime_field:
            return domain(int(value))
        return domain(value.numerator, value.denominator)

    def from_domain_element(self, value) -> Scalar:
        if self.is_prime_field:
            return int(value) % self.modulus
        return Fraction(int(value.numerator), int(value.denominator))

    def format(self, value: Scalar) -> str:
        """Render an element; prime-field elements use the symmetric range."""
        if self.is_prime_field:
            half = self.modulus // 2
            return str(value - self.modulus if value > half else value)
        return str(value)

    def __str__(self) -> str:
        return f"GF({self.modulus})" if self.is_prime_field else "QQ"
