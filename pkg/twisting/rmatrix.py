"""
The standard R-matrix of U_q(gl(n)) on V (x) V and the gl(3)
Cremmer-Gervais reference matrix.
"""

import logging
from core.exceptions import FactorizationMismatchError
from linalg.sparse import SparseMatrix
from linalg.tensor import basis_index
from qgroup.cartan import CartanVector
from qgroup.roots import descending_roots
from qgroup.words import root_e, root_f
from .factors import CartanExp, QExpFactor, TwistElement

logger = logging.getLogger('esoteric_rmatrix.twisting')


def r_standard_direct(n, field):
    """
    R_S = q sum E_aa (x) E_aa + sum_{a != b} E_aa (x) E_bb + omega sum_{a<b} E_ab (x) E_ba.
    """
    entries = []
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            index = basis_index((a, b), n)
            entries.append(((index, index), field.q if a == b else field.one))
            if a < b:
                entries.append(((index, basis_index((b, a), n)), field.omega))
    return SparseMatrix.from_entries(field, n * n, entries)


def standard_universal(n, field):
    """
    Factorized universal form: q^{sum E_aa (x) E_aa} followed by
    exp_{q^-2}(omega e_alpha (x) f_alpha) over the roots in descending order.
    """
    cartan = CartanExp(tuple((1, CartanVector.unit(n, a), CartanVector.unit(n, a)) for a in range(1, n + 1)))
    factors = [cartan] + [QExpFactor(field.omega, root_e(root), root_f(root), -2) for root in descending_roots(n)]
    return TwistElement(n, field, tuple(factors), 'R_S')


def r_standard_factorized(n, field):
    matrix = standard_universal(n, field).matrix
    difference = matrix.first_difference(r_standard_direct(n, field))
    if difference is not None:
        row, col, mine, theirs = difference
        raise FactorizationMismatchError(
            f'Factorized R_S differs from the direct form at ({row + 1}, {col + 1})',
            details={
                'row': row + 1,
                'col': col + 1,
                'lhs': field.canonical_string(mine),
                'rhs': field.canonical_string(theirs),
            },
        )
    logger.debug('Factorized R_S agrees with the direct form for gl(%d)', n)
    return matrix


def cg3_reference(field, p=None, nu=None):
    """
    gl(3) Cremmer-Gervais R-matrix in the parameters p and nu.
    """
    p = field.gen('p') if p is None else p
    nu = field.gen('nu') if nu is None else nu
    q = field.q
    p_squared = p * p

    def at(a, b):
        return basis_index((a, b), 3)

    matrix = r_standard_direct(3, field)
    diagonal = {
        (1, 2): p,
        (2, 3): p,
        (2, 1): field.inverse(p),
        (3, 2): field.inverse(p),
        (1, 3): field.div(p_squared, q),
        (3, 1): field.div(q, p_squared),
    }
    for pair, value in diagonal.items():
        matrix = matrix.with_entry(at(*pair), at(*pair), value)
    matrix = matrix.with_entry(at(3, 1), at(2, 2), q * nu)
    matrix = matrix.with_entry(at(1, 3), at(2, 2), -field.div(nu * p_squared, q))
    return matrix
