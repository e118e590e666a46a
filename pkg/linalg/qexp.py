"""
Truncated q-exponentials of nilpotent matrices.
"""

from core.exceptions import NotNilpotentError
from field.qnumbers import q_factorial
from .sparse import SparseMatrix


def qexp_nilpotent(coefficient, matrix, base):
    """
    exp_base(c M) = sum_k (c M)**k / [k; base]!, summed until the power vanishes.
    """
    field = matrix.field
    argument = matrix.scale(coefficient)
    result = SparseMatrix.identity(field, matrix.dim)
    power = argument
    k = 1
    while not power.is_zero:
        if k > matrix.dim:
            raise NotNilpotentError(
                f'argument not nilpotent: power {k} of a {matrix.dim}-dimensional matrix is nonzero'
            )
        result = result + power.scale(field.inverse(q_factorial(k, base, field)))
        power = power @ argument
        k += 1
    return result
