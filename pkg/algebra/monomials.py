"""Variable sets and exponent-vector helpers.

Monomials are dense exponent tuples indexed like the owning
``VariableSet.names``. Base variables come first, Rees variables after.
"""
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence, Tuple

from .errors import RingMismatchError

Monomial = Tuple[int, ...]


class Bidegree(NamedTuple):
    """(internal degree, Rees degree)."""
    internal: int
    rees: int

    def __add__(self, other):
        return Bidegree(self.internal + other[0], self.rees + other[1])

    def __sub__(self, other):
        return Bidegree(self.internal - other[0], self.rees - other[1])


@dataclass(frozen=True)
class VariableSet:
    """
    Ordered variable names of a bigraded polynomial ring.

    Base variables have bidegree (1, 0). Rees variable j has bidegree
    (rees_degrees[j], 1).
    """
    base_vars: Tuple[str, ...]
    rees_vars: Tuple[str, ...] = ()
    rees_degrees: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "base_vars", tuple(self.base_vars))
        object.__setattr__(self, "rees_vars", tuple(self.rees_vars))
        degrees = tuple(self.rees_degrees) or tuple(1 for _ in self.rees_vars)
        object.__setattr__(self, "rees_degrees", degrees)
        if len(degrees) != len(self.rees_vars):
            raise ValueError("Each Rees variable needs an internal degree")
        if any(d < 1 for d in degrees):
            raise ValueError("Rees variables must have internal degree >= 1")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"Duplicate variable names in {self.names}")

    @property
    def names(self) -> Tuple[str, ...]:
        return self.base_vars + self.rees_vars

    @property
    def nvars(self) -> int:
        return len(self.base_vars) + len(self.rees_vars)

    @property
    def nbase(self) -> int:
        return len(self.base_vars)

    @property
    def internal_weights(self) -> Tuple[int, ...]:
        return tuple(1 for _ in self.base_vars) + self.rees_degrees

    @property
    def rees_weights(self) -> Tuple[int, ...]:
        return tuple(0 for _ in self.base_vars) + tuple(1 for _ in self.rees_vars)

    @property
    def base_indices(self) -> range:
        return range(self.nbase)

    @property
    def rees_indices(self) -> range:
        return range(self.nbase, self.nvars)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise RingMismatchError(f"Unknown variable {name!r}")

    def with_rees(self, names: Sequence[str], degrees: Sequence[int]) -> "VariableSet":
        """Extend a base-only variable set by Rees variables."""
        return VariableSet(self.base_vars, tuple(names), tuple(degrees))

    def base_only(self) -> "VariableSet":
        return VariableSet(self.base_vars)

    def bidegree(self, exps: Monomial) -> Bidegree:
        return Bidegree(
            sum(e * w for e, w in zip(exps, self.internal_weights)),
            sum(exps[self.nbase:]),
        )

    def base_degree(self, exps: Monomial) -> int:
        """Degree in the base variables only (the x-order of a term)."""
        return sum(exps[:self.nbase])

    def format_monomial(self, exps: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True if a divides b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def monomials_of_degree(nvars: int, degree: int) -> Iterator[Monomial]:
    """All exponent vectors in nvars variables of total degree ``degree``."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            yield (first,) + rest
