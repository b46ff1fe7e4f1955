"""Buchberger's algorithm for submodules of graded free modules.

Vectors are dicts {(pos, exps): coeff}. Each basis vector may carry a
representation ("rep") in terms of the input generators, kept in the same
sparse format with the generator index as position. Pair pruning follows
the Gebauer-Möller criteria; the coprime-lead criterion is only applied
to ideals and only when no syzygies are collected.
"""
import logging
from dataclasses import dataclass, field
from heapq import heapify, heappop, heappush
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from algebra.field import CoefficientField, Scalar
from algebra.monomials import Monomial, monomial_div, monomial_divides, monomial_lcm, monomial_mul, monomials_coprime
from algebra.orders import ModuleOrder

from .errors import ComputationLimitError
from .limits import check_deadline, current_limits

logger = logging.getLogger(__name__)

Term = Tuple[int, Monomial]
Terms = Dict[Term, Scalar]


def axpy(target: Terms, source: Terms, exps: Monomial, coeff: Scalar, field: CoefficientField):
    """target += coeff * x^exps * source, in place."""
    for (pos, e), c in source.items():
        t = (pos, monomial_mul(e, exps))
        value = field.mul(c, coeff)
        old = target.get(t)
        if old is not None:
            value = field.add(old, value)
            if value == 0:
                del target[t]
                continue
        target[t] = value


def _negate(key: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(-k for k in key)


class Vector:
    """Monic basis vector with its lead term and optional representation."""

    __slots__ = ("terms", "rep", "lead")

    def __init__(self, terms: Terms, rep: Optional[Terms], lead: Term):
        self.terms = terms
        self.rep = rep
        self.lead = lead


@dataclass
class GroebnerRun:
    """Output of one Buchberger run."""
    basis: List[Vector]
    syzygies: List[Terms] = field(default_factory=list)
    pairs_processed: int = 0


class Buchberger:
    """
    Buchberger engine bound to a field, module order and term degree.

    Args:
        field: Coefficient field
        order: Module order
        nvars: Number of ring variables
        degree: Internal degree of a term, used to pick S-pairs degree by degree
        ideal: True when the ambient module has rank one
        track: Keep representations and collect syzygies of the input
    """

    def __init__(self, field: CoefficientField, order: ModuleOrder, nvars: int,
                 degree: Callable[[int, Monomial], int], ideal: bool = False, track: bool = False):
        self.field = field
        self.one_exps = (0,) * nvars
        self.order = order
        self.degree = degree
        self.ideal = ideal
        self.track = track

    def make_vector(self, terms: Terms, rep: Optional[Terms]) -> Vector:
        key = self.order.key
        lead = max(terms, key=lambda t: key(*t))
        lc = terms[lead]
        if lc != self.field.one:
            inv = self.field.inv(lc)
            mul = self.field.mul
            terms = {t: mul(c, inv) for t, c in terms.items()}
            if rep is not None:
                rep = {t: mul(c, inv) for t, c in rep.items()}
        return Vector(terms, rep, lead)

    @staticmethod
    def _find_reducer(term: Term, index: Dict[int, List[Vector]], skip: Optional[Vector] = None) -> Optional[Vector]:
        for v in index.get(term[0], ()):
            if v is not skip and monomial_divides(v.lead[1], term[1]):
                return v
        return None

    def reduce(self, terms: Terms, index: Dict[int, List[Vector]],
               skip: Optional[Vector] = None) -> Tuple[Terms, Optional[Terms]]:
        """
        Fully reduce a vector against indexed basis vectors.

        Returns:
            (remainder, quotient rep) with input = remainder + sum of the
            subtracted multiples; the rep is None when not tracking
        """
        field = self.field
        key = self.order.key
        work = dict(terms)
        heap = [(_negate(key(*t)), t) for t in work]
        heapify(heap)
        remainder: Terms = {}
        quotient: Optional[Terms] = {} if self.track else None
        while heap:
            _, t = heappop(heap)
            c = work.pop(t, None)
            if c is None:
                continue
            g = self._find_reducer(t, index, skip)
            if g is None:
                remainder[t] = c
                continue
            shift = monomial_div(t[1], g.lead[1])
            neg_c = field.neg(c)
            for gt, gc in g.terms.items():
                if gt == g.lead:
                    continue
                nt = (gt[0], monomial_mul(gt[1], shift))
                delta = field.mul(neg_c, gc)
                old = work.get(nt)
                if old is None:
                    work[nt] = delta
                    heappush(heap, (_negate(key(*nt)), nt))
                else:
                    value = field.add(old, delta)
                    if value == 0:
                        del work[nt]
                    else:
                        work[nt] = value
            if quotient is not None and g.rep:
                axpy(quotient, g.rep, shift, c, field)
        return remainder, quotient

    def _subtract(self, rep: Terms, quotient: Optional[Terms]) -> Terms:
        if not quotient:
            return rep
        result = dict(rep)
        axpy(result, quotient, self.one_exps, self.field.neg(self.field.one), self.field)
        return result

    def _spair(self, a: Vector, b: Vector, lcm: Monomial) -> Tuple[Terms, Optional[Terms]]:
        field = self.field
        ma = monomial_div(lcm, a.lead[1])
        mb = monomial_div(lcm, b.lead[1])
        terms: Terms = {}
        axpy(terms, a.terms, ma, field.one, field)
        axpy(terms, b.terms, mb, field.neg(field.one), field)
        rep: Optional[Terms] = None
        if self.track:
            rep = {}
            axpy(rep, a.rep or {}, ma, field.one, field)
            axpy(rep, b.rep or {}, mb, field.neg(field.one), field)
        return terms, rep

    def _selection(self, pos: int, lcm: Monomial):
        return (self.degree(pos, lcm), self.order.key(pos, lcm))

    def _update(self, basis: List[Vector], pairs: Dict[Tuple[int, int], tuple], k: int):
        """Gebauer-Möller update for the new basis vector ``basis[k]``."""
        hpos, hexp = basis[k].lead
        for (i, j), (_, pos, lcm) in list(pairs.items()):
            if pos != hpos or not monomial_divides(hexp, lcm):
                continue
            if lcm != monomial_lcm(basis[i].lead[1], hexp) and lcm != monomial_lcm(basis[j].lead[1], hexp):
                del pairs[(i, j)]

        groups: Dict[Monomial, List[int]] = {}
        for i in range(k):
            pos, exps = basis[i].lead
            if pos == hpos:
                groups.setdefault(monomial_lcm(exps, hexp), []).append(i)

        kept: List[Monomial] = []
        for lcm in sorted(groups, key=lambda m: self.order.key(hpos, m)):
            if any(monomial_divides(m, lcm) for m in kept):
                continue
            kept.append(lcm)
            members = groups[lcm]
            if self.ideal and not self.track and any(monomials_coprime(basis[i].lead[1], hexp) for i in members):
                continue
            pairs[(min(members), k)] = (self._selection(hpos, lcm), hpos, lcm)

    def run(self, generators: Sequence[Terms], reps: Optional[Sequence[Terms]] = None) -> GroebnerRun:
        """
        Compute a reduced Gröbner basis of the vectors ``generators``.

        Args:
            generators: Input vectors
            reps: Representations of the inputs; defaults to unit tags

        Returns:
            GroebnerRun with the reduced basis and, when tracking, the
            syzygies of the inputs found along the way
        """
        if self.track and reps is None:
            reps = [{(j, self.one_exps): self.field.one} for j in range(len(generators))]
        limits = current_limits()
        basis: List[Vector] = []
        index: Dict[int, List[Vector]] = {}
        pairs: Dict[Tuple[int, int], tuple] = {}
        run = GroebnerRun(basis=[])

        def insert(vector: Vector):
            basis.append(vector)
            index.setdefault(vector.lead[0], []).append(vector)
            self._update(basis, pairs, len(basis) - 1)

        for j, g in enumerate(generators):
            rep = dict(reps[j]) if self.track else None
            if not g:
                if self.track and rep:
                    run.syzygies.append(rep)
                continue
            insert(self.make_vector(dict(g), rep))

        while pairs:
            check_deadline()
            if limits.max_pairs and run.pairs_processed >= limits.max_pairs:
                raise ComputationLimitError(f"S-pair cap of {limits.max_pairs} reached")
            i, j = min(pairs, key=lambda p: pairs[p][0])
            _, _, lcm = pairs.pop((i, j))
            run.pairs_processed += 1
            terms, rep = self._spair(basis[i], basis[j], lcm)
            remainder, quotient = self.reduce(terms, index)
            if self.track:
                rep = self._subtract(rep, quotient)
            if remainder:
                insert(self.make_vector(remainder, rep))
            elif self.track and rep:
                run.syzygies.append(rep)

        run.basis = self.interreduce(basis)
        logger.debug("Buchberger: %d inputs, %d pairs, %d basis vectors, %d syzygies",
                     len(generators), run.pairs_processed, len(run.basis), len(run.syzygies))
        return run

    def interreduce(self, basis: List[Vector]) -> List[Vector]:
        """Drop vectors with redundant leads and tail-reduce the rest."""
        minimal: List[Vector] = []
        for idx, v in enumerate(basis):
            redundant = False
            for jdx, w in enumerate(basis):
                if jdx == idx or w.lead[0] != v.lead[0] or not monomial_divides(w.lead[1], v.lead[1]):
                    continue
                if w.lead[1] != v.lead[1] or jdx < idx:
                    redundant = True
                    break
            if not redundant:
                minimal.append(v)
        index: Dict[int, List[Vector]] = {}
        for v in minimal:
            index.setdefault(v.lead[0], []).append(v)
        reduced = []
        for v in minimal:
            terms, quotient = self.reduce(v.terms, index, skip=v)
            rep = self._subtract(v.rep, quotient) if self.track else None
            reduced.append(Vector(terms, rep, v.lead))
        return reduced
