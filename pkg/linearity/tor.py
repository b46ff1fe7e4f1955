"""Degreewise Tor against truncations by powers of the maximal ideal.

Tor_i(R/m^q, M) is the homology of F ⊗ R/m^q for F a resolution of M;
each bigraded piece of F ⊗ R/m^q is a finite vector space with basis
(k, x^a w^b) where |a| < q.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from algebra.field import Scalar
from algebra.free_module import FreeModule
from algebra.linalg import coordinates, nullspace, pivot_columns, rank, transpose
from algebra.monomials import Monomial, monomial_mul, monomials_of_degree
from resolutions.errors import ResolutionError
from resolutions.maps import ChainComplex, ModuleMap

logger = logging.getLogger(__name__)

BasisElement = Tuple[int, Monomial]


def piece_basis(module: FreeModule, q: int, internal: int, rees: int = 0) -> List[BasisElement]:
    """Basis of (module ⊗ S/m^q S) in bidegree (internal, rees)."""
    variables = module.ring.variables
    nbase, nrees = variables.nbase, len(variables.rees_vars)
    basis = []
    for k, shift in enumerate(module.shifts):
        remaining_rees = rees - shift.rees
        if remaining_rees < 0:
            continue
        for beta in monomials_of_degree(nrees, remaining_rees):
            rest = internal - shift.internal - sum(b * d for b, d in zip(beta, variables.rees_degrees))
            if rest < 0 or rest >= q:
                continue
            for alpha in monomials_of_degree(nbase, rest):
                basis.append((k, alpha + beta))
    return basis


def piece_degrees(module: FreeModule, q: int, rees: int = 0) -> Set[int]:
    """Internal degrees where (module ⊗ S/m^q S)_(*, rees) can be nonzero."""
    variables = module.ring.variables
    degrees = set()
    for shift in module.shifts:
        remaining = rees - shift.rees
        if remaining < 0:
            continue
        for beta in monomials_of_degree(len(variables.rees_vars), remaining):
            low = shift.internal + sum(b * d for b, d in zip(beta, variables.rees_degrees))
            degrees.update(range(low, low + q))
    return degrees


def piece_matrix(d: Optional[ModuleMap], q: int, source: Sequence[BasisElement],
                 target: Sequence[BasisElement]) -> List[List[Scalar]]:
    """Columns: images of the source basis, in target coordinates, truncated mod m^q."""
    if d is None:
        return []
    field_ = d.source.ring.field
    variables = d.source.ring.variables
    index = {b: n for n, b in enumerate(target)}
    columns = []
    for c, mono in source:
        column = [field_.zero] * len(target)
        for (r, e), coeff in d.columns[c].terms.items():
            exps = monomial_mul(e, mono)
            if variables.base_degree(exps) >= q:
                continue
            n = index.get((r, exps))
            if n is None:
                raise ResolutionError("Differential is not homogeneous")
            column[n] = field_.add(column[n], coeff)
        columns.append(column)
    return columns


@dataclass
class _Piece:
    basis: List[BasisElement]
    cycles: List[List[Scalar]]
    boundaries: List[List[Scalar]]


def _homology_piece(complex_: ChainComplex, i: int, q: int, internal: int, rees: int) -> _Piece:
    field_ = complex_.ring.field
    here = piece_basis(complex_.module(i), q, internal, rees)
    below = piece_basis(complex_.module(i - 1), q, internal, rees) if i >= 1 else []
    above = piece_basis(complex_.module(i + 1), q, internal, rees)
    outgoing = piece_matrix(complex_.differential(i), q, here, below) if i >= 1 else []
    incoming = piece_matrix(complex_.differential(i + 1), q, above, here)
    if i >= 1 and below:
        cycles = nullspace(transpose(outgoing, len(below)), len(here), field_)
    else:
        cycles = [[field_.one if a == b else field_.zero for b in range(len(here))] for a in range(len(here))]
    return _Piece(here, cycles, incoming)


def tor_piece_dimension(complex_: ChainComplex, i: int, q: int, internal: int, rees: int = 0) -> int:
    """dim Tor_i(S/m^q, M) in bidegree (internal, rees)."""
    field_ = complex_.ring.field
    piece = _homology_piece(complex_, i, q, internal, rees)
    if not piece.basis:
        return 0
    return len(piece.cycles) - rank(piece.boundaries, len(piece.basis), field_)


def tor_dimension(complex_: ChainComplex, i: int, q: int, rees: int = 0) -> int:
    """Total dimension of Tor_i(S/m^q, M) in Rees degree ``rees``."""
    if q <= 0:
        return 0
    return sum(tor_piece_dimension(complex_, i, q, j, rees) for j in sorted(piece_degrees(complex_.module(i), q, rees)))


@dataclass
class TorMapPiece:
    """
    The induced map in one bidegree, in chosen homology bases; row k of
    ``matrix`` is the image of source class k.
    """
    internal: int
    rees: int
    source_dim: int
    target_dim: int
    matrix: List[List[Scalar]] = field(default_factory=list)
    rank: int = 0

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.matrix for v in row)


@dataclass
class TorMap:
    """Tor_i(S/m^{q+1}, M) -> Tor_i(S/m^q, M), degree by degree."""
    i: int
    q: int
    pieces: List[TorMapPiece] = field(default_factory=list)

    @property
    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.pieces)

    @property
    def rank(self) -> int:
        return sum(p.rank for p in self.pieces)


def _complement(boundaries: List[List[Scalar]], cycles: List[List[Scalar]], length: int, field_) -> List[List[Scalar]]:
    """Cycles whose classes form a basis of span(cycles) / span(boundaries)."""
    pivots = pivot_columns(list(boundaries) + list(cycles), length, field_)
    offset = len(boundaries)
    return [cycles[p - offset] for p in pivots if p >= offset]


def sega_map(complex_: ChainComplex, i: int, q: int, rees: int = 0) -> TorMap:
    """
    The map Tor_i(S/m^{q+1}, M) -> Tor_i(S/m^q, M) induced by S/m^{q+1} -> S/m^q.

    Args:
        complex_: A free resolution of M
        i: Homological degree
        q: Truncation exponent (q = 0 gives the zero map)
        rees: Rees degree to inspect (0 over a standard graded ring)
    """
    result = TorMap(i, q)
    if q <= 0:
        return result
    field_ = complex_.ring.field
    for internal in sorted(piece_degrees(complex_.module(i), q + 1, rees)):
        source = _homology_piece(complex_, i, q + 1, internal, rees)
        target = _homology_piece(complex_, i, q, internal, rees)
        source_classes = _complement(source.boundaries, source.cycles, len(source.basis), field_)
        target_classes = _complement(target.boundaries, target.cycles, len(target.basis), field_)
        piece = TorMapPiece(internal, rees, len(source_classes), len(target_classes))
        if source_classes and target_classes:
            index = {b: n for n, b in enumerate(target.basis)}
            basis = list(target.boundaries) + target_classes
            offset = len(target.boundaries)
            for vector in source_classes:
                image = [field_.zero] * len(target.basis)
                for value, element in zip(vector, source.basis):
                    n = index.get(element)
                    if n is not None and value:
                        image[n] = value
                solution = coordinates(basis, image, field_)
                if solution is None:
                    raise ResolutionError("Truncated cycle does not map to a cycle")
                piece.matrix.append(solution[offset:])
            piece.rank = rank(piece.matrix, len(target_classes), field_)
            logger.debug("Tor_%d piece of degree %d: rank %d from %d to %d classes", i, internal, piece.rank,
                         piece.source_dim, piece.target_dim)
        result.pieces.append(piece)
    return result


def sega_map_is_zero(complex_: ChainComplex, i: int, q: int, rees: int = 0) -> bool:
    return sega_map(complex_, i, q, rees).is_zero
