"""
Coproduct images, composite root vectors and the defining-relation suite.
"""

import logging
from dataclasses import dataclass

from linalg.sparse import SparseMatrix
from linalg.tensor import flip_conjugate
from .cartan import CartanVector
from .representations import TensorRep
from .roots import cartan_entry
from .words import e, f, q_power, root_e, root_f, root_g

logger = logging.getLogger('esoteric_rmatrix.qgroup')


def delta_image(word, rep):
    """
    (rho (x) rho) Delta(word) on V (x) V.
    """
    return TensorRep(rep, rep).image(word)


def delta_op_image(word, rep):
    return flip_conjugate(delta_image(word, rep))


def composite_root_vectors(rep, datum):
    """
    Images of e_alpha, f_alpha over the positive roots of gl(n) and of
    g_{alpha'} over the positive roots of sl(N+1).
    """
    return {
        'e': {root: rep.image(root_e(root)) for root in datum.positive_roots(rep.n)},
        'f': {root: rep.image(root_f(root)) for root in datum.positive_roots(rep.n)},
        'g': {root: rep.image(root_g(datum, root)) for root in datum.positive_roots(datum.rank + 1)},
    }


@dataclass(frozen=True)
class RelationResult:
    relation: str
    passed: bool


@dataclass(frozen=True)
class RelationReport:
    results: tuple

    @property
    def passed(self):
        return all(result.passed for result in self.results)

    @property
    def failures(self):
        return [result.relation for result in self.results if not result.passed]


def relation_suite(rep):
    """
    Check the q-Serre presentation of U_q(gl(n)) in ``rep``.
    """
    field, n = rep.field, rep.n
    q = field.q
    results = []

    def record(name, lhs, rhs):
        results.append(RelationResult(name, lhs == rhs))

    zero = SparseMatrix.zero(field, rep.dim)
    for i in range(1, n):
        k = rep.image(q_power(CartanVector.coroot(n, i)))
        k_inverse = rep.image(q_power(-CartanVector.coroot(n, i)))
        e_i, f_i = rep.image(e(i)), rep.image(f(i))
        for j in range(1, n):
            a = cartan_entry(i, j)
            e_j, f_j = rep.image(e(j)), rep.image(f(j))
            record(f'q^h{i} e{j} q^-h{i} = q^{a} e{j}', k @ e_j @ k_inverse, e_j.scale(field.q_power(a)))
            record(f'q^h{i} f{j} q^-h{i} = q^{-a} f{j}', k @ f_j @ k_inverse, f_j.scale(field.q_power(-a)))

            commutator = e_i @ f_j - f_j @ e_i
            expected = (k - k_inverse).scale(field.inverse(q - field.one / q)) if i == j else zero
            record(f'[e{i},f{j}]', commutator, expected)

            if abs(i - j) == 1:
                q_sum = q + field.one / q
                record(
                    f'serre e{i}e{i}e{j}',
                    e_i @ e_i @ e_j - (e_i @ e_j @ e_i).scale(q_sum) + e_j @ e_i @ e_i,
                    zero,
                )
                record(
                    f'serre f{i}f{i}f{j}',
                    f_i @ f_i @ f_j - (f_i @ f_j @ f_i).scale(q_sum) + f_j @ f_i @ f_i,
                    zero,
                )
            elif i < j:
                record(f'e{i}e{j} = e{j}e{i}', e_i @ e_j, e_j @ e_i)
                record(f'f{i}f{j} = f{j}f{i}', f_i @ f_j, f_j @ f_i)

    report = RelationReport(tuple(results))
    if report.passed:
        logger.debug('Relation suite passed for gl(%d), %d relations', n, len(results))
    else:
        logger.warning('Relation suite failed: %s', ', '.join(report.failures))
    return report
