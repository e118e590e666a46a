"""
Twisting services: R_FG, twisted coproducts, L-matrices and the gl(3)
parameter match.
"""

import logging
from dataclasses import dataclass
from functools import cached_property

from core.exceptions import InconsistentParameterSystemError
from field.elements import Field
from linalg.elimination import inverse
from linalg.sparse import SparseMatrix
from linalg.tensor import flip_conjugate
from qgroup.representations import FundamentalRep, TensorRep
from .builders import TwistParams, build_F1, build_F2, build_F3, build_twist
from .rmatrix import cg3_reference, r_standard_direct

logger = logging.getLogger('esoteric_rmatrix.twisting')

CG_UNKNOWNS = ('p', 'nu')


def twist_R(twist, r_matrix):
    """
    F_21 R F^-1 with F^-1 taken factor-wise.
    """
    return twist.flipped_matrix @ r_matrix @ twist.inverse().matrix


def inverse_cross_check(twist):
    """
    True when the factor-wise inverse of F agrees with Gauss-Jordan.
    """
    return twist.inverse().matrix == inverse(twist.matrix)


def twisted_coproduct(twist, word):
    """
    F Delta(word) F^-1 on V (x) V.
    """
    rep = twist.rep
    return twist.matrix @ TensorRep(rep, rep).image(word) @ twist.inverse().matrix


class EsotericConstruction:
    """
    R_S, the twist stages and R_FG for one rank over one field, built lazily.
    """

    def __init__(self, rank, field=None):
        self.rank = rank
        self.field = field or Field.symbolic(rank)
        self.params = TwistParams(rank, self.field)

    @property
    def n(self):
        return 2 * self.rank + 1

    @cached_property
    def rep(self):
        return FundamentalRep(self.field, self.n)

    @cached_property
    def r_standard(self):
        return r_standard_direct(self.n, self.field)

    @cached_property
    def f1(self):
        return build_F1(self.rank, self.field)

    @cached_property
    def f2(self):
        return build_F2(self.params)

    @cached_property
    def f3(self):
        return build_F3(self.params)

    @cached_property
    def twist(self):
        return build_twist(self.params)

    @cached_property
    def r_fg(self):
        matrix = twist_R(self.twist, self.r_standard)
        logger.debug('Built R_FG for N=%d (%s), %d entries', self.rank, self.field.mode, matrix.nnz)
        return matrix

    @cached_property
    def l_matrices(self):
        return l_matrices(self.r_standard, self.twist)


def esoteric_r_matrix(rank, field=None):
    return EsotericConstruction(rank, field).r_fg


@dataclass(frozen=True)
class LMatrices:
    n: int
    plus_standard: SparseMatrix
    minus_standard: SparseMatrix
    plus_twisted: SparseMatrix
    minus_twisted: SparseMatrix

    def blocks(self, which):
        """
        n x n operators L_ij acting on the second leg, keyed by the
        leg-one matrix unit (i, j), 1-based.
        """
        matrix = getattr(self, which)
        n = self.n
        blocks = {}
        for row, entries in matrix.rows():
            i, a = divmod(row, n)
            for col, value in entries.items():
                j, b = divmod(col, n)
                blocks.setdefault((i + 1, j + 1), []).append(((a, b), value))
        return {
            key: SparseMatrix.from_entries(matrix.field, n, entries)
            for key, entries in sorted(blocks.items())
        }


def l_matrices(r_standard, twist):
    plus = r_standard
    minus = flip_conjugate(inverse(r_standard))
    return LMatrices(
        n=twist.n,
        plus_standard=plus,
        minus_standard=minus,
        plus_twisted=twist_R(twist, plus),
        minus_twisted=twist_R(twist, minus),
    )


def lift_matrix(matrix, field):
    """Re-read a symbolic matrix in a field with more variables."""
    source = matrix.field
    return matrix.map(lambda value: field.parse(source.canonical_string(value)), field=field)


def _monomial_exponents(field, value):
    """
    Variable exponents of a monomial c * prod x^k, or None for anything else.
    """
    numer_terms, denom_terms = value.numer.terms(), value.denom.terms()
    if len(numer_terms) != 1 or len(denom_terms) != 1:
        return None
    (top, _), (bottom, _) = numer_terms[0], denom_terms[0]
    return {name: up - down for name, up, down in zip(field.table.names, top, bottom) if up != down}


def match_parameters(r_fg, reference_builder=cg3_reference):
    """
    Solve for p and nu so that the reference matrix equals ``r_fg``.

    Returns (joint field, {name: value}).
    """
    joint = Field(r_fg.field.table.extended(*CG_UNKNOWNS))
    target = lift_matrix(r_fg, joint)
    reference = reference_builder(joint)
    solutions = {}

    for (row, col), value in reference.entries():
        exponents = _monomial_exponents(joint, value)
        if exponents is None:
            continue
        unsolved = [name for name in CG_UNKNOWNS if exponents.get(name) and name not in solutions]
        if len(unsolved) != 1 or abs(exponents[unsolved[0]]) != 1:
            continue
        name = unsolved[0]
        rest = value
        for unknown in CG_UNKNOWNS:
            exponent = exponents.get(unknown, 0)
            if exponent:
                rest = rest * joint.power(joint.gen(unknown), -exponent)
                if unknown in solutions:
                    rest = rest * joint.power(solutions[unknown], exponent)
        entry = target.get(row, col)
        if not entry:
            raise InconsistentParameterSystemError(
                f'Cannot solve for {name}: R_FG vanishes at ({row + 1}, {col + 1})',
                details=_conflict(joint, row, col, value, entry),
            )
        solved = joint.div(entry, rest)
        solutions[name] = solved if exponents[name] == 1 else joint.inverse(solved)
        logger.debug('Solved %s = %s from entry (%d, %d)', name, joint.canonical_string(solutions[name]), row + 1, col + 1)

    missing = [name for name in CG_UNKNOWNS if name not in solutions]
    if missing:
        raise InconsistentParameterSystemError(f'No entry determines {", ".join(missing)}')

    specialized = reference_builder(joint, **solutions)
    difference = specialized.first_difference(target)
    if difference is not None:
        row, col, expected, found = difference
        raise InconsistentParameterSystemError(
            f'R_FG and the reference disagree at ({row + 1}, {col + 1})',
            details=_conflict(joint, row, col, found, expected),
        )
    return joint, solutions


def _conflict(field, row, col, lhs, rhs):
    return {
        'row': row + 1,
        'col': col + 1,
        'lhs': field.canonical_string(lhs),
        'rhs': field.canonical_string(rhs),
    }
