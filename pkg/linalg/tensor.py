"""
Tensor-product bookkeeping on V^{(x)k}.

Basis vector v_{i1} (x) ... (x) v_{ik} has index sum_j (i_j - 1) * n**(k - j)
(row-major, 0-based here).
"""

from functools import reduce
from itertools import product
from math import isqrt

from core.exceptions import DimensionMismatchError, LegIndexError
from .sparse import SparseMatrix


def basis_index(indices, n):
    """
    0-based index of v_{i1} (x) ... (x) v_{ik} for 1-based ``indices``.
    """
    index = 0
    for i in indices:
        if not 1 <= i <= n:
            raise LegIndexError(f'Basis label {i} outside 1..{n}')
        index = index * n + (i - 1)
    return index


def basis_labels(index, n, legs):
    labels = []
    for _ in range(legs):
        index, digit = divmod(index, n)
        labels.append(digit + 1)
    return tuple(reversed(labels))


def kron(*matrices):
    """
    Kronecker product of two or more matrices in row-major basis order.
    """
    return reduce(_kron_pair, matrices)


def _kron_pair(left, right):
    width = right.dim
    rows = {}
    for row_a, entries_a in left.rows():
        for row_b, entries_b in right.rows():
            target = rows.setdefault(row_a * width + row_b, {})
            for col_a, value_a in entries_a.items():
                for col_b, value_b in entries_b.items():
                    target[col_a * width + col_b] = value_a * value_b
    return SparseMatrix(left.field, left.dim * width, rows)


def _factor_dimension(matrix):
    n = isqrt(matrix.dim)
    if n * n != matrix.dim:
        raise DimensionMismatchError(f'Dimension {matrix.dim} is not of the form n**2')
    return n


def flip_conjugate(matrix):
    """
    P M P with P(v_i (x) v_j) = v_j (x) v_i.
    """
    n = _factor_dimension(matrix)

    def swap(index):
        first, second = divmod(index, n)
        return second * n + first

    rows = {}
    for row, entries in matrix.rows():
        rows[swap(row)] = {swap(col): value for col, value in entries.items()}
    return SparseMatrix(matrix.field, matrix.dim, rows)


def embed_legs(matrix, legs, total, n):
    """
    Operator acting as ``matrix`` on the ordered ``legs`` of V^{(x)total}.

    The first tensor factor of ``matrix`` lands on legs[0], the second on
    legs[1] and so on; identity on the remaining legs.
    """
    legs = tuple(legs)
    if len(set(legs)) != len(legs) or any(not 1 <= leg <= total for leg in legs):
        raise LegIndexError(f'Legs {legs} invalid for {total} tensor factors')
    if matrix.dim != n ** len(legs):
        raise DimensionMismatchError(
            f'A {matrix.dim}-dimensional operator cannot act on {len(legs)} legs of dimension {n}'
        )
    weights = [n ** (total - leg) for leg in range(1, total + 1)]
    others = [leg for leg in range(1, total + 1) if leg not in legs]
    offsets = [
        sum(digit * weights[leg - 1] for digit, leg in zip(digits, others))
        for digits in product(range(n), repeat=len(others))
    ]

    def place(index):
        position = 0
        for digit, leg in zip(basis_labels(index, n, len(legs)), legs):
            position += (digit - 1) * weights[leg - 1]
        return position

    rows = {}
    for row, entries in matrix.rows():
        placed_row = place(row)
        placed_entries = [(place(col), value) for col, value in entries.items()]
        for offset in offsets:
            rows[placed_row + offset] = {col + offset: value for col, value in placed_entries}
    return SparseMatrix(matrix.field, n ** total, rows)


def leg_embed(matrix, legs, total):
    """
    Two-leg operator on V (x) V placed on ``legs`` of V^{(x)total}.
    """
    if len(legs) != 2:
        raise LegIndexError(f'leg_embed expects two legs, got {legs}')
    return embed_legs(matrix, legs, total, _factor_dimension(matrix))
