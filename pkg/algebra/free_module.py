"""Graded free modules and their elements."""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import RingMismatchError
from .field import Scalar
from .monomials import Bidegree, Monomial, monomial_mul
from .orders import ModuleOrder, PositionOverTerm
from .polynomial import Polynomial, PolynomialRing

Term = Tuple[int, Monomial]


@dataclass(frozen=True)
class FreeModule:
    """
    F = ⊕_k S(-shift_k). Generator e_k sits in bidegree ``shifts[k]``.
    """
    ring: PolynomialRing
    shifts: Tuple[Bidegree, ...]

    def __post_init__(self):
        object.__setattr__(self, "shifts", tuple(Bidegree(*s) for s in self.shifts))

    @classmethod
    def of_rank(cls, ring: PolynomialRing, rank: int) -> "FreeModule":
        return cls(ring, tuple(Bidegree(0, 0) for _ in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.shifts)

    @cached_property
    def default_order(self) -> ModuleOrder:
        return PositionOverTerm(self.ring.default_order)

    def zero(self) -> "FreeElement":
        return FreeElement(self, {})

    def basis(self, k: int) -> "FreeElement":
        if not 0 <= k < self.rank:
            raise IndexError(f"Basis index {k} out of range for rank {self.rank}")
        return FreeElement(self, {(k, self.ring.one_exps): self.ring.field.one})

    def element(self, components: Sequence[Union[Polynomial, int]]) -> "FreeElement":
        if len(components) != self.rank:
            raise RingMismatchError(f"Expected {self.rank} components, got {len(components)}")
        terms = {}
        for pos, comp in enumerate(components):
            if not isinstance(comp, Polynomial):
                comp = self.ring.constant(comp)
            elif comp.ring != self.ring:
                raise RingMismatchError(f"Component over {comp.ring}, module over {self.ring}")
            for exps, coeff in comp.terms.items():
                terms[(pos, exps)] = coeff
        return FreeElement(self, terms)

    def term_bidegree(self, pos: int, exps: Monomial) -> Bidegree:
        return self.shifts[pos] + self.ring.variables.bidegree(exps)

    def direct_sum(self, other: "FreeModule") -> "FreeModule":
        if other.ring != self.ring:
            raise RingMismatchError("Direct sum over different rings")
        return FreeModule(self.ring, self.shifts + other.shifts)

    def same_underlying(self, other: "FreeModule") -> bool:
        return self.ring == other.ring and self.rank == other.rank

    def rebase(self, element: "FreeElement") -> "FreeElement":
        """View an element of a module with the same ring and rank in this one."""
        if not self.same_underlying(element.module):
            raise RingMismatchError("Free modules differ in ring or rank")
        return FreeElement(self, element.terms)

    def __str__(self) -> str:
        if not self.shifts:
            return "0"
        return " + ".join(f"S(-{s.internal},-{s.rees})" for s in self.shifts)


class FreeElement:
    """Sparse vector of a free module; ``terms`` maps (pos, exps) to coefficients."""

    __slots__ = ("module", "terms")

    def __init__(self, module: FreeModule, terms: Optional[Dict[Term, Scalar]] = None):
        self.module = module
        self.terms = {t: c for t, c in (terms or {}).items() if c != 0}

    @property
    def ring(self) -> PolynomialRing:
        return self.module.ring

    def _check(self, other: "FreeElement"):
        if other.module is not self.module and not self.module.same_underlying(other.module):
            raise RingMismatchError("Elements of different free modules")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def component(self, pos: int) -> Polynomial:
        return Polynomial(self.ring, {e: c for (p, e), c in self.terms.items() if p == pos})

    def components(self) -> List[Polynomial]:
        buckets: List[Dict[Monomial, Scalar]] = [{} for _ in range(self.module.rank)]
        for (pos, exps), coeff in self.terms.items():
            buckets[pos][exps] = coeff
        return [Polynomial(self.ring, b) for b in buckets]

    def positions(self) -> List[int]:
        return sorted({pos for pos, _ in self.terms})

    def __add__(self, other: "FreeElement") -> "FreeElement":
        self._check(other)
        field = self.ring.field
        terms = dict(self.terms)
        for t, c in other.terms.items():
            terms[t] = field.add(terms[t], c) if t in terms else c
        return FreeElement(self.module, terms)

    def __neg__(self) -> "FreeElement":
        neg = self.ring.field.neg
        return FreeElement(self.module, {t: neg(c) for t, c in self.terms.items()})

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        return self + (-other)

    def scale(self, coeff: Scalar) -> "FreeElement":
        mul = self.ring.field.mul
        return FreeElement(self.module, {t: mul(c, coeff) for t, c in self.terms.items()})

    def mul_term(self, exps: Monomial, coeff: Scalar) -> "FreeElement":
        mul = self.ring.field.mul
        return FreeElement(
            self.module,
            {(p, monomial_mul(e, exps)): mul(c, coeff) for (p, e), c in self.terms.items()},
        )

    def __rmul__(self, other) -> "FreeElement":
        if not isinstance(other, Polynomial):
            return self.scale(self.ring.field.element(other))
        if other.ring != self.ring:
            raise RingMismatchError("Scalar polynomial from a different ring")
        field = self.ring.field
        terms: Dict[Term, Scalar] = {}
        for e1, c1 in other.terms.items():
            for (pos, e2), c2 in self.terms.items():
                t = (pos, monomial_mul(e1, e2))
                c = field.mul(c1, c2)
                terms[t] = field.add(terms[t], c) if t in terms else c
        return FreeElement(self.module, terms)

    __mul__ = __rmul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self.module.same_underlying(other.module) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def leading_term(self, order: Optional[ModuleOrder] = None) -> Tuple[Term, Scalar]:
        if not self.terms:
            raise ValueError("Zero vector has no leading term")
        order = order or self.module.default_order
        term = max(self.terms, key=lambda t: order.key(*t))
        return term, self.terms[term]

    def bidegree(self) -> Optional[Bidegree]:
        """Shared bidegree of all terms, None when zero or inhomogeneous."""
        degrees = {self.module.term_bidegree(p, e) for p, e in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def is_homogeneous(self) -> bool:
        return not self.terms or self.bidegree() is not None

    def internal_degree(self) -> Optional[int]:
        degrees = {self.module.term_bidegree(p, e).internal for p, e in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def base_order(self) -> Optional[int]:
        if not self.terms:
            return None
        variables = self.ring.variables
        return min(variables.base_degree(e) for _, e in self.terms)

    def project(self, positions: Iterable[int], target: FreeModule) -> "FreeElement":
        """Keep the listed positions, renumbered in order, as an element of ``target``."""
        index = {p: i for i, p in enumerate(positions)}
        return FreeElement(
            target,
            {(index[p], e): c for (p, e), c in self.terms.items() if p in index},
        )

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.components()) + "]"

    def __repr__(self) -> str:
        return f"FreeElement({self})"


def bidegree_of(value: Union[Polynomial, FreeElement]) -> Optional[Bidegree]:
    """
    Shared bidegree of a polynomial or vector.

    Returns:
        The bidegree, or None when the input is inhomogeneous (or zero)
    """
    return value.bidegree()
