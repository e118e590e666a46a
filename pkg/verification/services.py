"""
Verification runner.
"""

import logging

from django.conf import settings
from sympy import prime

from core.exceptions import (
    DegenerateQNumberError,
    DimensionMismatchError,
    DivisionByZeroError,
    SingularMatrixError,
    SubstitutionPoleError,
    UnknownCheckError,
)
from field.elements import Field, VarTable
from twisting.services import EsotericConstruction
from . import checks
from .reports import NUMERIC, SYMBOLIC, merge_reports

logger = logging.getLogger('esoteric_rmatrix.verification')

CHECK_NAMES = (
    'cocycle',
    'compare-cg',
    'counit',
    'factorization',
    'hecke',
    'intertwine',
    'lmatrix',
    'param-count',
    'relations',
    'rll',
    'ybe',
)
ALWAYS_SYMBOLIC = ('compare-cg', 'param-count')
RETRYABLE_ERRORS = (DivisionByZeroError, SubstitutionPoleError, DegenerateQNumberError, SingularMatrixError)


def generic_assignment(rank, offset=0):
    """
    Consecutive primes for (s, mu..., b..., a...) starting ``offset`` primes after 2.
    """
    table = VarTable.for_rank(rank)
    ordered = (
        ['s']
        + [name for name in table if name.startswith('mu')]
        + [name for name in table if name.startswith('b')]
        + [name for name in table if name.startswith('a')]
    )
    return {name: prime(offset + position + 1) for position, name in enumerate(ordered)}


def expand_check_names(names, rank):
    """
    Deduplicate and sort check names; ``all`` means every check that
    applies to ``rank``.
    """
    selected = set()
    for name in names:
        if name == 'all':
            selected.update(check for check in CHECK_NAMES if rank == 1 or check != 'compare-cg')
        elif name in CHECK_NAMES:
            selected.add(name)
        else:
            raise UnknownCheckError(f'Unknown check "{name}"')
    return sorted(selected)


class VerificationService:
    """
    Runs named checks for one rank under the mode policy.
    """

    def __init__(self, rank, assignment=None, samples=None, symbolic=False):
        if rank < 1:
            raise DimensionMismatchError(f'N must be positive, got {rank}')
        self.rank = rank
        self.assignment = assignment
        self.samples = samples or settings.VERIFICATION_DEFAULT_SAMPLES
        self.symbolic = symbolic
        self._constructions = {}

    def mode_for(self, name):
        if name in ALWAYS_SYMBOLIC:
            return SYMBOLIC
        if self.assignment is not None:
            return NUMERIC
        if self.symbolic or self.rank <= settings.VERIFICATION_SYMBOLIC_MAX_N:
            return SYMBOLIC
        return NUMERIC

    def run(self, names):
        reports = [self.run_check(name) for name in expand_check_names(names, self.rank)]
        failed = [report.check for report in reports if not report.passed]
        logger.info('Ran %d checks for N=%d, %d failed', len(reports), self.rank, len(failed))
        return reports

    def run_check(self, name):
        if name == 'compare-cg' and self.rank != 1:
            raise UnknownCheckError('compare-cg is defined for N=1 only')
        if self.mode_for(name) == SYMBOLIC:
            construction = self.construction(Field.symbolic(self.rank))
            return self._run_on(name, construction).with_context(rank=self.rank)
        return self._run_numeric(name)

    def construction(self, field):
        if field not in self._constructions:
            self._constructions[field] = EsotericConstruction(self.rank, field)
        return self._constructions[field]

    def _run_numeric(self, name):
        if self.assignment is not None:
            fields = [Field(VarTable.for_rank(self.rank), self.assignment)]
            return self._combine(name, fields, [self._run_on(name, self.construction(fields[0]))])

        fields, reports = [], []
        offset = 0
        while len(reports) < self.samples:
            attempts = 0
            while True:
                field = Field(VarTable.for_rank(self.rank), generic_assignment(self.rank, offset))
                offset += 1
                try:
                    report = self._run_on(name, self.construction(field))
                    break
                except RETRYABLE_ERRORS as exc:
                    attempts += 1
                    logger.warning('Assignment %s rejected for %s: %s', field.assignment_strings(), name, exc)
                    self._constructions.pop(field, None)
                    if attempts > settings.VERIFICATION_PRIME_RETRIES:
                        raise
            fields.append(field)
            reports.append(report)
        return self._combine(name, fields, reports)

    def _combine(self, name, fields, reports):
        merged = reports[0] if len(reports) == 1 else merge_reports(name, reports, range(len(reports)))
        if len(reports) > 1:
            merged = merged.with_context(details=reports[0].details)
        return merged.with_context(
            rank=self.rank,
            mode=NUMERIC,
            assignments=[field.assignment_strings() for field in fields],
        )

    def _run_on(self, name, construction):
        if name == 'ybe':
            return checks.check_ybe(construction.r_fg)
        if name == 'cocycle':
            return checks.check_cocycle(construction.twist)
        if name == 'factorization':
            return checks.check_factorization(construction.f2, construction.f1)
        if name == 'hecke':
            parts = [checks.check_hecke(construction.r_standard), checks.check_hecke(construction.r_fg)]
            return merge_reports('hecke', parts, ['standard', 'twisted'])
        if name == 'intertwine':
            parts = [
                checks.check_intertwiner(construction.r_standard, construction.rep),
                checks.check_intertwiner(construction.r_fg, construction.rep, construction.twist),
            ]
            return merge_reports('intertwine', parts, ['standard', 'twisted'])
        if name == 'compare-cg':
            return checks.check_compare_cg(construction.r_fg)
        if name == 'param-count':
            return checks.check_param_count(self.rank, construction.r_fg)
        if name == 'relations':
            return checks.check_relations(construction.rep)
        if name == 'rll':
            return checks.check_twisted_rll(construction)
        if name == 'counit':
            return checks.check_counit(construction.twist)
        if name == 'lmatrix':
            return checks.check_lmatrix_identity(construction.r_standard, construction.twist)
        raise UnknownCheckError(f'Unknown check "{name}"')
