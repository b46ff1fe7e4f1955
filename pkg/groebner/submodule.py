"""Submodules of graded free modules and finitely presented modules."""
import logging
import threading
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from algebra.errors import RingMismatchError
from algebra.field import Scalar
from algebra.free_module import FreeElement, FreeModule, Term
from algebra.monomials import Bidegree
from algebra.orders import ModuleOrder, SchreyerOrder
from algebra.polynomial import Polynomial, PolynomialRing

from .buchberger import Buchberger, GroebnerRun, Vector

logger = logging.getLogger(__name__)


class Submodule:
    """
    Submodule of a free module, given by an ordered generator list.

    Gröbner bases are computed on first use and cached; the cache is
    published once under a lock so instances can be shared by threads.
    """

    def __init__(self, ambient: FreeModule, generators: Iterable[FreeElement] = (),
                 order: Optional[ModuleOrder] = None):
        self.ambient = ambient
        gens = []
        for g in generators:
            if g.module is not ambient and not ambient.same_underlying(g.module):
                raise RingMismatchError("Generator does not live in the ambient module")
            gens.append(g if g.module is ambient else FreeElement(ambient, g.terms))
        self.generators: Tuple[FreeElement, ...] = tuple(gens)
        self.order = order or ambient.default_order
        self._lock = threading.Lock()
        self._plain: Optional[GroebnerRun] = None
        self._tracked: Optional[GroebnerRun] = None

    @classmethod
    def ideal(cls, ring: PolynomialRing, polys: Iterable[Polynomial]) -> "Submodule":
        """An ideal as a submodule of the rank-one free module."""
        ambient = FreeModule.of_rank(ring, 1)
        return cls(ambient, [ambient.element([p]) for p in polys])

    @property
    def ring(self) -> PolynomialRing:
        return self.ambient.ring

    @property
    def is_ideal(self) -> bool:
        return self.ambient.rank == 1

    def polynomials(self) -> List[Polynomial]:
        """Generators of an ideal as polynomials."""
        return [g.component(0) for g in self.generators]

    def with_order(self, order: ModuleOrder) -> "Submodule":
        return Submodule(self.ambient, self.generators, order)

    def with_generators(self, generators: Iterable[FreeElement]) -> "Submodule":
        return Submodule(self.ambient, generators, self.order)

    def _degree_function(self):
        weights = self.ring.variables.internal_weights
        shifts = self.ambient.shifts

        def degree(pos, exps):
            return shifts[pos].internal + sum(e * w for e, w in zip(exps, weights))
        return degree

    def engine(self, track: bool = False) -> Buchberger:
        return Buchberger(
            self.ring.field, self.order, self.ring.nvars, self._degree_function(),
            ideal=self.is_ideal, track=track,
        )

    def _run(self, track: bool = False) -> GroebnerRun:
        if self._tracked is not None:
            return self._tracked
        if not track and self._plain is not None:
            return self._plain
        with self._lock:
            if self._tracked is None and (track or self._plain is None):
                run = self.engine(track).run([g.terms for g in self.generators])
                if track:
                    self._tracked = run
                else:
                    self._plain = run
        return self._tracked if self._tracked is not None else self._plain

    @staticmethod
    def _index(basis: Sequence[Vector]) -> Dict[int, List[Vector]]:
        index: Dict[int, List[Vector]] = {}
        for v in basis:
            index.setdefault(v.lead[0], []).append(v)
        return index

    def groebner_basis(self) -> List[FreeElement]:
        """Reduced Gröbner basis under ``self.order``."""
        return [FreeElement(self.ambient, v.terms) for v in self._run().basis]

    def leading_terms(self) -> List[Term]:
        return [v.lead for v in self._run().basis]

    def normal_form(self, v: FreeElement) -> FreeElement:
        """Remainder of v modulo the Gröbner basis; zero iff v lies in the submodule."""
        remainder, _ = self.engine().reduce(dict(v.terms), self._index(self._run().basis))
        return FreeElement(self.ambient, remainder)

    def contains(self, v: FreeElement) -> bool:
        if v.is_zero():
            return True
        return self.normal_form(v).is_zero()

    def is_zero(self) -> bool:
        return all(g.is_zero() for g in self.generators)

    def is_subset(self, other: "Submodule") -> bool:
        return all(other.contains(g) for g in self.generators)

    def equals(self, other: "Submodule") -> bool:
        return self.is_subset(other) and other.is_subset(self)

    def source_module(self) -> FreeModule:
        """Free module with one generator per generator of self, shifted by its bidegree."""
        shifts = []
        for g in self.generators:
            degree = g.bidegree()
            shifts.append(degree if degree is not None else Bidegree(0, 0))
        return FreeModule(self.ring, tuple(shifts))

    def _source_order(self, source: FreeModule) -> ModuleOrder:
        if any(g.is_zero() for g in self.generators):
            return source.default_order
        leads = tuple(g.leading_term(self.order)[0] for g in self.generators)
        return SchreyerOrder(self.order, leads)

    def lift(self, v: FreeElement) -> Optional[FreeElement]:
        """
        Express v in terms of the generators.

        Returns:
            u in the source module with sum u_j g_j = v, or None when v is
            not in the submodule
        """
        run = self._run(track=True)
        remainder, quotient = self.engine(track=True).reduce(dict(v.terms), self._index(run.basis))
        if remainder:
            return None
        return FreeElement(self.source_module(), quotient or {})

    def syzygies(self) -> "Submodule":
        """
        Minimal generators of the relations among the generators, as a
        submodule of ``source_module()`` under a Schreyer-induced order.
        """
        source = self.source_module()
        run = self._run(track=True)
        syz = Submodule(source, [FreeElement(source, rep) for rep in run.syzygies], self._source_order(source))
        syz = syz.minimal_generators()
        logger.debug("%d generators have %d minimal syzygies", len(self.generators), len(syz.generators))
        return syz

    def minimal_generators(self) -> "Submodule":
        """Graded Nakayama selection of a minimal generating subsequence."""
        return self.with_generators(select_minimal(self.generators, (), self.ambient, self.order))

    def __add__(self, other: "Submodule") -> "Submodule":
        if not self.ambient.same_underlying(other.ambient):
            raise RingMismatchError("Sum of submodules of different free modules")
        return self.with_generators(self.generators + tuple(FreeElement(self.ambient, g.terms) for g in other.generators))

    def multiply(self, polys: Iterable[Polynomial]) -> "Submodule":
        """The product J * self for J generated by ``polys``."""
        polys = list(polys)
        return self.with_generators([p * g for p in polys for g in self.generators])

    def __str__(self) -> str:
        if self.is_ideal:
            return "(" + ", ".join(str(p) for p in self.polynomials()) + ")"
        return "<" + ", ".join(str(g) for g in self.generators) + ">"


def _echelon_reduce(terms: Dict[Term, Scalar], echelon: Dict[Term, Dict[Term, Scalar]], leads: List[Term], field) -> Dict[Term, Scalar]:
    """Eliminate echelon leads (sorted descending) from a degree-homogeneous vector."""
    work = dict(terms)
    for lead in leads:
        c = work.get(lead)
        if c is None:
            continue
        for t, value in echelon[lead].items():
            new = field.sub(work.get(t, field.zero), field.mul(c, value))
            if new == 0:
                work.pop(t, None)
            else:
                work[t] = new
    return work


def select_minimal(candidates: Sequence[FreeElement], base: Sequence[FreeElement],
                   ambient: FreeModule, order: ModuleOrder) -> List[FreeElement]:
    """
    Pick a minimal subsequence of ``candidates`` generating (candidates + base)
    modulo base.

    Candidates are scanned by internal degree; one is kept when it is not in
    base plus the kept ones of lower degree plus the k-span of kept ones of
    its own degree. Inhomogeneous input falls back to plain membership tests.
    """
    gens = [g for g in candidates if not g.is_zero()]
    degrees = [g.internal_degree() for g in gens]
    field = ambient.ring.field
    if any(d is None for d in degrees):
        kept: List[FreeElement] = []
        for g in gens:
            if not Submodule(ambient, list(base) + kept, order).contains(g):
                kept.append(g)
        return kept

    ranking = sorted(range(len(gens)), key=lambda i: (degrees[i], i))
    kept = []
    current = None
    lower: Optional[Submodule] = None
    echelon: Dict[Term, Dict[Term, Scalar]] = {}
    leads: List[Term] = []
    for i in ranking:
        if degrees[i] != current:
            current = degrees[i]
            span = list(base) + kept
            lower = Submodule(ambient, span, order) if span else None
            echelon, leads = {}, []
        g = gens[i]
        terms = lower.normal_form(g).terms if lower is not None else g.terms
        reduced = _echelon_reduce(terms, echelon, leads, field)
        if not reduced:
            continue
        lead = max(reduced, key=lambda t: order.key(*t))
        inv = field.inv(reduced[lead])
        echelon[lead] = {t: field.mul(c, inv) for t, c in reduced.items()}
        leads.append(lead)
        leads.sort(key=lambda t: order.key(*t), reverse=True)
        kept.append(g)
    return kept


@dataclass(frozen=True, eq=False)
class PresentedModule:
    """The cokernel ``free / relations``."""
    free: FreeModule
    relations: Submodule

    def __post_init__(self):
        if not self.free.same_underlying(self.relations.ambient):
            raise RingMismatchError("Relations do not live in the presenting free module")

    @property
    def ring(self) -> PolynomialRing:
        return self.free.ring

    @classmethod
    def free_module(cls, free: FreeModule) -> "PresentedModule":
        return cls(free, Submodule(free))

    @classmethod
    def cokernel(cls, free: FreeModule, relations: Iterable[FreeElement]) -> "PresentedModule":
        return cls(free, Submodule(free, relations))

    @classmethod
    def quotient_ring(cls, ideal: Submodule) -> "PresentedModule":
        """R/I for an ideal I."""
        if not ideal.is_ideal:
            raise RingMismatchError("quotient_ring expects an ideal")
        return cls(ideal.ambient, ideal)

    @classmethod
    def subquotient(cls, numerator: Submodule, denominator: Optional[Submodule] = None) -> "PresentedModule":
        """
        Present (A + B) / B for submodules A, B of one free module.

        Generators are a minimal subsequence of A's generators modulo B;
        relations are the projections of the syzygies of [a ; b].
        """
        ambient = numerator.ambient
        base = list(denominator.generators) if denominator is not None else []
        gens = select_minimal(numerator.generators, base, ambient, numerator.order)
        combined = Submodule(ambient, gens + [FreeElement(ambient, b.terms) for b in base], numerator.order)
        source = combined.source_module()
        free = FreeModule(ambient.ring, source.shifts[:len(gens)])
        if not base:
            relations = combined.syzygies()
            return cls(free, Submodule(free, [FreeElement(free, r.terms) for r in relations.generators], relations.order))
        projected = [r.project(range(len(gens)), free) for r in combined.syzygies().generators]
        return cls(free, Submodule(free, projected).minimal_generators())

    @classmethod
    def from_submodule(cls, submodule: Submodule) -> "PresentedModule":
        """A submodule viewed as an abstract module."""
        return cls.subquotient(submodule)

    def with_relations(self, extra: Iterable[FreeElement]) -> "PresentedModule":
        return PresentedModule(self.free, self.relations.with_generators(
            self.relations.generators + tuple(FreeElement(self.free, v.terms) for v in extra)))

    def is_zero(self) -> bool:
        return all(self.relations.contains(self.free.basis(k)) for k in range(self.free.rank))

    def __str__(self) -> str:
        return f"coker({self.free} <- {self.relations})"
