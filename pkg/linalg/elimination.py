"""
Exact sparse Gauss-Jordan inversion.
"""

import logging

from core.exceptions import SingularMatrixError
from .sparse import SparseMatrix

logger = logging.getLogger('esoteric_rmatrix.linalg')


def inverse(matrix):
    """
    Invert ``matrix`` by row reduction of [M | I].

    Pivots are chosen as the sparsest candidate row of each column.
    """
    field, dim = matrix.field, matrix.dim
    left = {index: dict(matrix.row(index)) for index in range(dim)}
    right = {index: {index: field.one} for index in range(dim)}
    unused = set(range(dim))
    pivot_rows = {}

    for col in range(dim):
        candidates = [index for index in unused if col in left[index]]
        if not candidates:
            raise SingularMatrixError(f'No pivot in column {col + 1} of a {dim}-dimensional matrix')
        pivot = min(candidates, key=lambda index: (len(left[index]) + len(right[index]), index))
        unused.discard(pivot)
        pivot_rows[col] = pivot

        scale = field.inverse(left[pivot][col])
        left[pivot] = {c: value * scale for c, value in left[pivot].items()}
        right[pivot] = {c: value * scale for c, value in right[pivot].items()}

        for index in range(dim):
            if index == pivot or col not in left[index]:
                continue
            factor = -left[index][col]
            _add_multiple(left[index], left[pivot], factor)
            _add_multiple(right[index], right[pivot], factor)

    logger.debug('Inverted %d-dimensional matrix with %d entries', dim, matrix.nnz)
    return SparseMatrix(field, dim, {col: right[pivot_rows[col]] for col in range(dim) if right[pivot_rows[col]]})


def _add_multiple(target, source, factor):
    for col, value in source.items():
        updated = target[col] + factor * value if col in target else factor * value
        if updated:
            target[col] = updated
        else:
            target.pop(col, None)
