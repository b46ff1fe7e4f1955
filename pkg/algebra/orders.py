"""Monomial and module term orders.

Every order exposes ``key``; a larger key means a larger term. Keys are
flat int tuples so they can be negated and pushed onto a heap.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Sequence, Tuple

from .errors import RingMismatchError
from .monomials import Monomial, monomial_mul

OrderKey = Tuple[int, ...]


class MonomialOrder(ABC):
    """Abstract base class for monomial orders."""

    name: str = "monomial-order"

    @abstractmethod
    def key(self, exps: Monomial) -> OrderKey:
        """
        Sort key of an exponent vector.

        Args:
            exps: Exponent vector

        Returns:
            Tuple comparing like the order
        """
        pass

    @property
    @abstractmethod
    def nvars(self) -> int:
        pass


@dataclass(frozen=True)
class GrevlexOrder(MonomialOrder):
    """Weighted degree first, ties broken reverse-lexicographically."""
    weights: Tuple[int, ...]
    name = "grevlex"

    @property
    def nvars(self) -> int:
        return len(self.weights)

    def key(self, exps: Monomial) -> OrderKey:
        return (sum(e * w for e, w in zip(exps, self.weights)),) + tuple(-e for e in reversed(exps))


@dataclass(frozen=True)
class EliminationOrder(MonomialOrder):
    """
    Block order: any term involving a ``block`` variable beats every term
    free of them. Inside each block a weighted grevlex order applies.
    """
    block: Tuple[int, ...]
    weights: Tuple[int, ...]
    name = "elimination"

    @property
    def nvars(self) -> int:
        return len(self.weights)

    @property
    def rest(self) -> Tuple[int, ...]:
        return tuple(i for i in range(len(self.weights)) if i not in self.block)

    def key(self, exps: Monomial) -> OrderKey:
        inner = tuple(exps[i] for i in self.block)
        outer = tuple(exps[i] for i in self.rest)
        outer_weights = tuple(self.weights[i] for i in self.rest)
        return (
            (sum(inner),)
            + tuple(-e for e in reversed(inner))
            + (sum(e * w for e, w in zip(outer, outer_weights)),)
            + tuple(-e for e in reversed(outer))
        )


class ModuleOrder(ABC):
    """Order on terms (position, exponents) of a free module."""

    name: str = "module-order"

    @abstractmethod
    def key(self, pos: int, exps: Monomial) -> OrderKey:
        pass


@dataclass(frozen=True)
class PositionOverTerm(ModuleOrder):
    """Position first (e_0 largest), then the monomial order."""
    monomial_order: MonomialOrder
    name = "position-over-term"

    def key(self, pos: int, exps: Monomial) -> OrderKey:
        return (-pos,) + self.monomial_order.key(exps)


@dataclass(frozen=True)
class TermOverPosition(ModuleOrder):
    """Monomial order first, position breaks ties."""
    monomial_order: MonomialOrder
    name = "term-over-position"

    def key(self, pos: int, exps: Monomial) -> OrderKey:
        return self.monomial_order.key(exps) + (-pos,)


@dataclass(frozen=True)
class SchreyerOrder(ModuleOrder):
    """
    Order induced on a free module G mapping to F by a list of lead terms:
    m*g_j is compared through m*lead(j) in F, ties go to the smaller index.
    """
    base: ModuleOrder
    leads: Tuple[Tuple[int, Monomial], ...]
    name = "schreyer"

    def key(self, pos: int, exps: Monomial) -> OrderKey:
        lead_pos, lead_exps = self.leads[pos]
        return self.base.key(lead_pos, monomial_mul(exps, lead_exps)) + (-pos,)


def compare_monomials(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    """
    Three-way comparison of two exponent vectors.

    Returns:
        -1, 0 or 1
    """
    if len(a) != len(b) or len(a) != order.nvars:
        raise RingMismatchError("Monomials come from different variable sets")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


def compare_terms(a: Tuple[int, Monomial], b: Tuple[int, Monomial], order: ModuleOrder) -> int:
    ka, kb = order.key(*a), order.key(*b)
    return (ka > kb) - (ka < kb)


def grevlex_for(weights: Sequence[int]) -> GrevlexOrder:
    return GrevlexOrder(tuple(weights))


@dataclass(frozen=True)
class WeightOverOrder(ModuleOrder):
    """
    Terms with larger weight shifts[pos] + <weights, exps> come first; the
    ``tie`` order decides between equal weights. With non-negative weights
    this is a module order, and initial forms of a Gröbner basis under it
    generate the module of weight-initial forms.
    """
    weights: Tuple[int, ...]
    shifts: Tuple[int, ...]
    tie: ModuleOrder
    name = "weight-over-order"

    def weight(self, pos: int, exps: Monomial) -> int:
        return self.shifts[pos] + sum(e * w for e, w in zip(exps, self.weights))

    def key(self, pos: int, exps: Monomial) -> OrderKey:
        return (self.weight(pos, exps),) + self.tie.key(pos, exps)
