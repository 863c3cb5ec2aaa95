"""
Exact linear algebra on top of sympy's DomainMatrix.

Vectors are lists of Fractions; matrices are either Matrix models or row lists.
Every routine takes the field explicitly so the same code serves QQ and GF(p).
"""

from collections.abc import Sequence
from fractions import Fraction
from typing import NamedTuple

from sympy.polys.matrices import DomainMatrix

from algebra.fields import RATIONALS, Field
from models import Matrix

Vector = list[Fraction]


class SubspaceDims(NamedTuple):
    """Dimensions of U, W, their sum and their intersection"""

    dim_u: int
    dim_w: int
    dim_sum: int
    dim_intersection: int


def _shape(matrix: "Matrix | Sequence[Sequence[Fraction]]", cols: int | None) -> tuple[list, int]:
    if isinstance(matrix, Matrix):
        return [list(row) for row in matrix.entries], matrix.cols
    rows = [list(row) for row in matrix]
    if cols is None:
        cols = len(rows[0]) if rows else 0
    return rows, cols


def to_domain_matrix(rows: list[Vector], cols: int, field: Field) -> DomainMatrix:
    elements = [[field.element(Fraction(x)) for x in row] for row in rows]
    return DomainMatrix(elements, (len(rows), cols), field.domain)


def rref(
    matrix: "Matrix | Sequence[Sequence[Fraction]]",
    field: Field = RATIONALS,
    cols: int | None = None,
) -> tuple[list[Vector], tuple[int, ...]]:
    """Reduced row echelon form and pivot columns"""
    rows, cols = _shape(matrix, cols)
    if not rows or cols == 0:
        return [[Fraction(0)] * cols for _ in rows], ()
    reduced, pivots = to_domain_matrix(rows, cols, field).rref()
    entries = [[field.to_fraction(x) for x in row] for row in reduced.to_list()]
    return entries, tuple(pivots)


def rank(
    matrix: "Matrix | Sequence[Sequence[Fraction]]",
    field: Field = RATIONALS,
    cols: int | None = None,
) -> int:
    rows, cols = _shape(matrix, cols)
    if not rows or cols == 0:
        return 0
    return len(to_domain_matrix(rows, cols, field).rref()[1])


def kernel_basis(
    matrix: "Matrix | Sequence[Sequence[Fraction]]",
    field: Field = RATIONALS,
    cols: int | None = None,
) -> list[Vector]:
    """
    Basis of the right null space, one vector per free column.

    Each vector has a 1 in its free column and is read off the reduced rows.
    """
    rows, cols = _shape(matrix, cols)
    reduced, pivots = rref(rows, field, cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * cols
        vector[free] = Fraction(1)
        for row_index, pivot in enumerate(pivots):
            vector[pivot] = field.reduce(-reduced[row_index][free])
        basis.append(vector)
    return basis


def span_rank(vectors: Sequence[Vector], length: int, field: Field = RATIONALS) -> int:
    """Dimension of the span of the given vectors"""
    return rank([list(v) for v in vectors], field, length)


def subspace_dims(
    u: Sequence[Vector], w: Sequence[Vector], field: Field = RATIONALS, length: int | None = None
) -> SubspaceDims:
    """Dimensions of two spanned subspaces, their sum and intersection"""
    lengths = {len(v) for v in list(u) + list(w)}
    if length is not None:
        lengths.add(length)
    if len(lengths) > 1:
        raise ValueError(f"vectors of different lengths {sorted(lengths)}")
    length = lengths.pop() if lengths else 0
    dim_u = span_rank(u, length, field)
    dim_w = span_rank(w, length, field)
    dim_sum = span_rank(list(u) + list(w), length, field)
    return SubspaceDims(dim_u, dim_w, dim_sum, dim_u + dim_w - dim_sum)


def independent_extension(
    base: Sequence[Vector], candidates: Sequence[Vector], length: int, field: Field = RATIONALS
) -> list[Vector]:
    """Greedy choice of candidates that raise the rank of the base span"""
    chosen: list[Vector] = []
    current = span_rank(base, length, field)
    for vector in candidates:
        trial = span_rank(list(base) + chosen + [vector], length, field)
        if trial > current:
            chosen.append(list(vector))
            current = trial
    return chosen


def solve_in_span(
    basis: Sequence[Vector], target: Vector, field: Field = RATIONALS
) -> Vector | None:
    """
    Coordinates of target in an independent list of vectors.

    Returns:
        One coefficient per basis vector, or None when target is outside the span
    """
    length = len(target)
    if not basis:
        return [] if all(field.reduce(Fraction(x)) == 0 for x in target) else None
    augmented = [[Fraction(vector[i]) for vector in basis] + [Fraction(target[i])] for i in range(length)]
    reduced, pivots = rref(augmented, field, len(basis) + 1)
    if len(basis) in pivots:
        return None
    solution = [Fraction(0)] * len(basis)
    for row_index, pivot in enumerate(pivots):
        solution[pivot] = reduced[row_index][len(basis)]
    return solution


def mat_vec(matrix: "Matrix | Sequence[Sequence[Fraction]]", vector: Vector, field: Field = RATIONALS) -> Vector:
    rows, _ = _shape(matrix, len(vector))
    return [
        field.reduce(sum((Fraction(a) * Fraction(b) for a, b in zip(row, vector)), Fraction(0)))
        for row in rows
    ]
