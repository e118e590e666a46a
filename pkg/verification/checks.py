"""
Identity checks on R-matrices and twists.

Every check returns a ``CheckReport``; a failing identity is a report with
a witness, never an exception.
"""

import logging
import time
from functools import wraps
from math import isqrt

from django.conf import settings

from core.exceptions import InconsistentParameterSystemError
from linalg.elimination import inverse
from linalg.sparse import SparseMatrix
from linalg.tensor import basis_index, flip_conjugate, leg_embed
from qgroup.cartan import CartanVector
from qgroup.services import delta_image, relation_suite
from qgroup.words import e, f, q_power
from twisting.factors import TwistElement
from twisting.rmatrix import cg3_reference
from twisting.services import EsotericConstruction, l_matrices, lift_matrix, match_parameters
from .reports import CheckReport, entry_witness, merge_reports

logger = logging.getLogger('esoteric_rmatrix.verification')


def timed(function):
    @wraps(function)
    def wrapper(*args, **kwargs):
        started = time.perf_counter()
        report = function(*args, **kwargs)
        millis = int((time.perf_counter() - started) * 1000) if settings.VERIFICATION_REPORT_TIMINGS else 0
        report = report.with_context(millis=millis)
        if report.passed:
            logger.info('%s passed (%s, %d ms)', report.check, report.mode, millis)
        else:
            logger.warning('%s failed (%s): %s', report.check, report.mode, report.witness)
        return report
    return wrapper


def compare(check, lhs, rhs, details=None):
    field = lhs.field
    difference = lhs.first_difference(rhs)
    witness = None if difference is None else entry_witness(field, *difference)
    return CheckReport(check=check, passed=witness is None, mode=field.mode, witness=witness, details=details)


def _permutation(field, n):
    entries = [
        ((basis_index((b, a), n), basis_index((a, b), n)), field.one)
        for a in range(1, n + 1)
        for b in range(1, n + 1)
    ]
    return SparseMatrix.from_entries(field, n * n, entries)


@timed
def check_ybe(r_matrix):
    """R12 R13 R23 = R23 R13 R12."""
    r12, r13, r23 = (leg_embed(r_matrix, legs, 3) for legs in ((1, 2), (1, 3), (2, 3)))
    return compare('ybe', r12 @ r13 @ r23, r23 @ r13 @ r12)


@timed
def check_cocycle(twist):
    """F12 (Delta (x) id)(F) = F23 (id (x) Delta)(F)."""
    lhs = twist.on_legs((1, 2), 3) @ twist.pushed_left()
    rhs = twist.on_legs((2, 3), 3) @ twist.pushed_right()
    return compare('cocycle', lhs, rhs)


@timed
def check_factorization(f2, f1=None):
    """
    (Delta_t (x) id)(F2) = F2_23 F2_13 and (id (x) Delta_t)(F2) = F2_12 F2_13,
    Delta_t being the coproduct twisted by ``f1`` (plain Delta without it).
    """
    pushed_left, pushed_right = f2.pushed_left(), f2.pushed_right()
    if f1 is not None:
        f1_inverse = f1.inverse()
        pushed_left = f1.on_legs((1, 2), 3) @ pushed_left @ f1_inverse.on_legs((1, 2), 3)
        pushed_right = f1.on_legs((2, 3), 3) @ pushed_right @ f1_inverse.on_legs((2, 3), 3)
    f2_12, f2_13, f2_23 = (f2.on_legs(legs, 3) for legs in ((1, 2), (1, 3), (2, 3)))
    left = compare('factorization', pushed_left, f2_23 @ f2_13)
    right = compare('factorization', pushed_right, f2_12 @ f2_13)
    return merge_reports('factorization', [left, right], ['left', 'right'])


@timed
def check_hecke(r_matrix):
    """(P R - q)(P R + q^-1) = 0."""
    field = r_matrix.field
    n = isqrt(r_matrix.dim)
    braid = _permutation(field, n) @ r_matrix
    identity = SparseMatrix.identity(field, r_matrix.dim)
    product = (braid - identity.scale(field.q)) @ (braid + identity.scale(field.inverse(field.q)))
    return compare('hecke', product, SparseMatrix.zero(field, r_matrix.dim))


def generator_words(n):
    words = {}
    for i in range(1, n):
        words[f'e{i}'] = e(i)
        words[f'f{i}'] = f(i)
    for a in range(1, n + 1):
        words[f'q^E{a}{a}'] = q_power(CartanVector.unit(n, a))
    return words


@timed
def check_intertwiner(r_matrix, rep, twist=None):
    """
    R Delta(x) = Delta^op(x) R for every generator x, with Delta twisted
    by ``twist`` when given.
    """
    if twist is not None:
        twist_matrix, twist_inverse = twist.matrix, twist.inverse().matrix
    for name, word in generator_words(rep.n).items():
        coproduct = delta_image(word, rep)
        if twist is not None:
            coproduct = twist_matrix @ coproduct @ twist_inverse
        report = compare('intertwine', r_matrix @ coproduct, flip_conjugate(coproduct) @ r_matrix)
        if not report.passed:
            return report.with_context(details={'generator': name})
    return CheckReport(
        check='intertwine', passed=True, mode=r_matrix.field.mode, details={'generators': len(generator_words(rep.n))}
    )


@timed
def check_compare_cg(r_fg=None, reference_builder=cg3_reference):
    """
    Solve for (p, nu) and compare R_FG with the gl(3) reference entrywise.
    """
    r_fg = r_fg if r_fg is not None else EsotericConstruction(1).r_fg
    try:
        joint, solutions = match_parameters(r_fg, reference_builder)
    except InconsistentParameterSystemError as exc:
        witness = exc.details if 'row' in exc.details else {'row': None, 'col': None, 'lhs': exc.message, 'rhs': None}
        return CheckReport(check='compare-cg', passed=False, mode=r_fg.field.mode, witness=witness)
    substitution = {name: joint.canonical_string(value) for name, value in solutions.items()}
    report = compare('compare-cg', lift_matrix(r_fg, joint), reference_builder(joint, **solutions))
    return report.with_context(details={'substitution': substitution, 'entries': r_fg.dim ** 2})


@timed
def check_param_count(rank, r_fg=None):
    """
    Variables occurring in symbolic R_FG against (N+1)(N+2)/2.
    """
    construction = EsotericConstruction(rank)
    r_fg = r_fg if r_fg is not None else construction.r_fg
    field = r_fg.field
    used = set()
    for _, value in r_fg.entries():
        used |= field.variables_of(value)
    variables = [name for name in construction.params.variable_names if name in used]
    expected = construction.params.parameter_count
    witness = None
    if len(variables) != expected:
        witness = {'row': None, 'col': None, 'lhs': str(len(variables)), 'rhs': str(expected)}
    return CheckReport(
        check='param-count',
        passed=witness is None,
        mode=field.mode,
        witness=witness,
        details={'variables': variables, 'expected': expected},
    )


@timed
def check_rll(r_matrix, l_matrix):
    """R12 L13 L23 = L23 L13 R12."""
    r12 = leg_embed(r_matrix, (1, 2), 3)
    l13, l23 = leg_embed(l_matrix, (1, 3), 3), leg_embed(l_matrix, (2, 3), 3)
    return compare('rll', r12 @ l13 @ l23, l23 @ l13 @ r12)


@timed
def check_counit(twist):
    """
    (epsilon (x) id)(X) = 1 = (id (x) epsilon)(X) for every factor X of ``twist``.
    """
    identity = SparseMatrix.identity(twist.field, twist.n)
    for position, factor in enumerate(twist.factors, start=1):
        single = TwistElement(twist.n, twist.field, (factor,), f'{twist.label}[{position}]')
        for side, matrix in (('left', single.counit_left()), ('right', single.counit_right())):
            report = compare('counit', matrix, identity)
            if not report.passed:
                return report.with_context(details={'factor': position, 'side': side})
    return CheckReport(check='counit', passed=True, mode=twist.field.mode, details={'factors': len(twist.factors)})


@timed
def check_lmatrix_identity(r_standard, twist):
    """
    L+_CG = R_FG and L-_CG = P R_FG^-1 P, with R_FG^-1 from Gauss-Jordan.
    """
    matrices = l_matrices(r_standard, twist)
    r_fg = twist.flipped_matrix @ r_standard @ inverse(twist.matrix)
    plus = compare('lmatrix', matrices.plus_twisted, r_fg)
    minus = compare('lmatrix', matrices.minus_twisted, flip_conjugate(inverse(r_fg)))
    return merge_reports('lmatrix', [plus, minus], ['plus', 'minus'])


@timed
def check_relations(rep):
    report = relation_suite(rep)
    witness = None
    if not report.passed:
        witness = {'row': None, 'col': None, 'lhs': report.failures[0], 'rhs': None}
    return CheckReport(
        check='relations',
        passed=report.passed,
        mode=rep.field.mode,
        witness=witness,
        details={'relations': len(report.results), 'failures': report.failures},
    )


def check_twisted_rll(construction):
    """
    RLL for both L-matrix families of a construction: (R_S, L+-_S) and (R_FG, L+-_CG).
    """
    matrices = construction.l_matrices
    r_fg = construction.r_fg
    parts = [
        check_rll(construction.r_standard, matrices.plus_standard),
        check_rll(construction.r_standard, matrices.minus_standard),
        check_rll(r_fg, matrices.plus_twisted),
        check_rll(r_fg, matrices.minus_twisted),
    ]
    return merge_reports('rll', parts, ['standard+', 'standard-', 'twisted+', 'twisted-'])
