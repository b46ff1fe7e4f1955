"""Sparse multivariate polynomials over an exact coefficient field."""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

from .errors import RingMismatchError
from .field import CoefficientField, Scalar
from .monomials import Bidegree, Monomial, VariableSet, monomial_divides, monomial_div, monomial_mul
from .orders import GrevlexOrder, MonomialOrder


@dataclass(frozen=True)
class PolynomialRing:
    """k[x_1..x_n, w_0..w_{m-1}] with its bigrading."""
    field: CoefficientField
    variables: VariableSet

    @property
    def nvars(self) -> int:
        return self.variables.nvars

    @cached_property
    def default_order(self) -> GrevlexOrder:
        """Grevlex weighted by internal degree."""
        return GrevlexOrder(self.variables.internal_weights)

    @cached_property
    def one_exps(self) -> Monomial:
        return (0,) * self.nvars

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, value) -> "Polynomial":
        return Polynomial(self, {self.one_exps: self.field.element(value)})

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        if len(exps) != self.nvars:
            raise RingMismatchError(f"Expected {self.nvars} exponents, got {len(exps)}")
        return Polynomial(self, {tuple(exps): self.field.element(coeff)})

    def gen(self, name: str) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self.variables.index(name)] = 1
        return self.monomial(exps)

    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.gen(name) for name in self.variables.names)

    def base_gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.gen(name) for name in self.variables.base_vars)

    def base_ring(self) -> "PolynomialRing":
        return PolynomialRing(self.field, self.variables.base_only())

    def with_field(self, field: CoefficientField) -> "PolynomialRing":
        return PolynomialRing(field, self.variables)

    def convert(self, poly: "Polynomial") -> "Polynomial":
        """
        Move a polynomial into this ring, matching variables by name.

        Raises:
            RingMismatchError: if a variable in use is missing here
        """
        if poly.ring == self:
            return poly
        source = poly.ring.variables.names
        positions = [self.variables.index(name) for name in source]
        terms = {}
        for exps, coeff in poly.terms.items():
            new = [0] * self.nvars
            for i, e in enumerate(exps):
                if e:
                    new[positions[i]] = e
            terms[tuple(new)] = self.field.element(coeff)
        return Polynomial(self, terms)

    def parse(self, text: str) -> "Polynomial":
        from .parsing import parse_polynomial
        return parse_polynomial(text, self)

    def __str__(self) -> str:
        return f"{self.field}[{', '.join(self.variables.names)}]"


class Polynomial:
    """
    Immutable sparse polynomial; ``terms`` maps exponent tuples to
    nonzero coefficients.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolynomialRing, terms: Optional[Dict[Monomial, Scalar]] = None):
        self.ring = ring
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    @property
    def field(self) -> CoefficientField:
        return self.ring.field

    def _check(self, other: "Polynomial"):
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return self.ring.constant(other)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        field = self.field
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = field.add(terms[e], c) if e in terms else c
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        neg = self.field.neg
        return Polynomial(self.ring, {e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def scale(self, coeff: Scalar) -> "Polynomial":
        mul = self.field.mul
        return Polynomial(self.ring, {e: mul(c, coeff) for e, c in self.terms.items()})

    def mul_term(self, exps: Monomial, coeff: Scalar) -> "Polynomial":
        mul = self.field.mul
        return Polynomial(self.ring, {monomial_mul(e, exps): mul(c, coeff) for e, c in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            if not isinstance(other, (int, Fraction, str)):
                return NotImplemented
            return self.scale(self.field.element(other))
        self._check(other)
        field = self.field
        terms: Dict[Monomial, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = monomial_mul(e1, e2)
                c = field.mul(c1, c2)
                terms[e] = field.add(terms[e], c) if e in terms else c
        return Polynomial(self.ring, terms)

    def __rmul__(self, other) -> "Polynomial":
        return self.scale(self.field.element(other))

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("Negative powers are not polynomials")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def leading_term(self, order: Optional[MonomialOrder] = None) -> Tuple[Monomial, Scalar]:
        if not self.terms:
            raise ValueError("Zero polynomial has no leading term")
        order = order or self.ring.default_order
        exps = max(self.terms, key=order.key)
        return exps, self.terms[exps]

    def leading_monomial(self, order: Optional[MonomialOrder] = None) -> Monomial:
        return self.leading_term(order)[0]

    def monic(self, order: Optional[MonomialOrder] = None) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.leading_term(order)[1]))

    def bidegree(self) -> Optional[Bidegree]:
        """Shared bidegree of all terms; None for zero or inhomogeneous input."""
        degrees = {self.ring.variables.bidegree(e) for e in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def is_homogeneous(self) -> bool:
        return not self.terms or self.bidegree() is not None

    def internal_degree(self) -> Optional[int]:
        degrees = {self.ring.variables.bidegree(e).internal for e in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def homogeneous_component(self, internal: int) -> "Polynomial":
        variables = self.ring.variables
        return Polynomial(
            self.ring,
            {e: c for e, c in self.terms.items() if variables.bidegree(e).internal == internal},
        )

    def base_order(self) -> Optional[int]:
        """Smallest base-variable degree of a term (the x-adic order)."""
        if not self.terms:
            return None
        return min(self.ring.variables.base_degree(e) for e in self.terms)

    def divides_exactly(self, other: "Polynomial") -> Optional["Polynomial"]:
        """Quotient other / self when the division is exact, else None."""
        if self.is_zero():
            return None
        order = self.ring.default_order
        lead, lc = self.leading_term(order)
        inv = self.field.inv(lc)
        remainder = other
        quotient = self.ring.zero()
        while not remainder.is_zero():
            exps, coeff = remainder.leading_term(order)
            if not monomial_divides(lead, exps):
                return None
            step = monomial_div(exps, lead)
            c = self.field.mul(coeff, inv)
            quotient = quotient + Polynomial(self.ring, {step: c})
            remainder = remainder - self.mul_term(step, c)
        return quotient

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Evaluate the ring map sending variable i to images[i]."""
        if len(images) != self.ring.nvars:
            raise RingMismatchError("One image per variable is required")
        target = images[0].ring if images else self.ring
        result = target.zero()
        for exps, coeff in self.terms.items():
            term = target.constant(coeff)
            for image, e in zip(images, exps):
                if e:
                    term = term * image ** e
            result = result + term
        return result

    def sorted_terms(self, order: Optional[MonomialOrder] = None) -> Iterable[Tuple[Monomial, Scalar]]:
        order = order or self.ring.default_order
        return sorted(self.terms.items(), key=lambda item: order.key(item[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        variables = self.ring.variables
        pieces = []
        for exps, coeff in self.sorted_terms():
            text = self.field.format(coeff)
            negative = text.startswith("-")
            magnitude = text[1:] if negative else text
            monomial = variables.format_monomial(exps)
            if monomial == "1":
                body = magnitude
            elif magnitude == "1":
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


PolynomialLike = Union[Polynomial, int]
