"""Exact dense linear algebra over the coefficient field via sympy DomainMatrix."""
from typing import List, Optional, Sequence

from sympy.polys.matrices import DomainMatrix

from .field import CoefficientField, Scalar

Vector = List[Scalar]


def _domain_matrix(rows: Sequence[Sequence[Scalar]], ncols: int, field: CoefficientField) -> DomainMatrix:
    domain = field.to_domain()
    converted = [[field.to_domain_element(v, domain) for v in row] for row in rows]
    return DomainMatrix(converted, (len(converted), ncols), domain)


def rank(rows: Sequence[Sequence[Scalar]], ncols: int, field: CoefficientField) -> int:
    """Rank of the matrix whose rows are given."""
    if not rows or ncols == 0:
        return 0
    return _domain_matrix(rows, ncols, field).rank()


def nullspace(rows: Sequence[Sequence[Scalar]], ncols: int, field: CoefficientField) -> List[Vector]:
    """Basis of {x : A x = 0} for A given by rows."""
    if ncols == 0:
        return []
    if not rows:
        return [[field.one if i == j else field.zero for j in range(ncols)] for i in range(ncols)]
    basis = _domain_matrix(rows, ncols, field).nullspace()
    return [[field.from_domain_element(v) for v in row] for row in basis.to_list()]


def transpose(rows: Sequence[Sequence[Scalar]], ncols: int) -> List[Vector]:
    return [[row[j] for row in rows] for j in range(ncols)]


def coordinates(basis: Sequence[Sequence[Scalar]], vector: Sequence[Scalar],
                field: CoefficientField) -> Optional[Vector]:
    """
    Solve sum_k c_k basis[k] = vector.

    Returns:
        Coefficients c, or None when vector is outside the span
    """
    length = len(vector)
    if length == 0:
        return [field.zero] * len(basis)
    if not basis:
        return [] if all(v == 0 for v in vector) else None
    columns = list(basis) + [list(vector)]
    rows = transpose(columns, length)
    reduced, pivots = _domain_matrix(rows, len(columns), field).rref()
    last = len(columns) - 1
    if last in pivots:
        return None
    table = reduced.to_list()
    solution = [field.zero] * len(basis)
    for k, p in enumerate(pivots):
        solution[p] = field.from_domain_element(table[k][last])
    return solution


def pivot_columns(columns: Sequence[Sequence[Scalar]], length: int, field: CoefficientField) -> List[int]:
    """Indices of the columns selected as pivots by row reduction (leftmost first)."""
    if not columns or length == 0:
        return []
    rows = transpose(columns, length)
    _, pivots = _domain_matrix(rows, len(columns), field).rref()
    return list(pivots)
