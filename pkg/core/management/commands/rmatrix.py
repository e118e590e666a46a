"""
Django management command generating R-matrices and twists and running
identity checks.

    python manage.py rmatrix gen rs --n 3 [--factorized] [-o file]
    python manage.py rmatrix gen rfg --N 1 [--params file] [-o file]
    python manage.py rmatrix gen twist --N 1 --stage all [-o file]
    python manage.py rmatrix check ybe cocycle --N 2 [--numeric file] [--samples k] [--symbolic] [--report file]
"""

import json
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from core.exceptions import RMatrixError
from field.elements import Field, VarTable
from field.serializers import AssignmentSerializer
from linalg.serializers import MatrixSerializer
from twisting.builders import TwistParams, build_twist
from twisting.rmatrix import r_standard_direct, r_standard_factorized
from twisting.serializers import TwistElementSerializer
from twisting.services import esoteric_r_matrix
from verification.serializers import CheckReportSerializer
from verification.services import CHECK_NAMES, VerificationService

STAGE_CHOICES = ('1', '2', '3', 'all')


class Command(BaseCommand):
    help = 'Generate R-matrices and twists, and verify their identities'

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest='action', required=True)

        gen = actions.add_parser('gen', help='Write a matrix or twist element as JSON')
        targets = gen.add_subparsers(dest='target', required=True)

        rs = targets.add_parser('rs', help='Standard R-matrix of gl(n)')
        rs.add_argument('--n', dest='n', type=int, required=True, help='gl(n) dimension')
        rs.add_argument('--factorized', action='store_true', help='Build through the root factorization')
        rs.add_argument('-o', '--output', help='Output file (default: stdout)')

        rfg = targets.add_parser('rfg', help='Esoteric R-matrix R_FG of gl(2N+1)')
        rfg.add_argument('--N', dest='rank', type=int, required=True, help='Twist rank N')
        rfg.add_argument('--params', help='JSON assignment file for a numeric matrix')
        rfg.add_argument('-o', '--output', help='Output file (default: stdout)')

        twist = targets.add_parser('twist', help='Twist element F or one of its stages')
        twist.add_argument('--N', dest='rank', type=int, required=True, help='Twist rank N')
        twist.add_argument('--stage', choices=STAGE_CHOICES, default='all', help='Stage to emit (default: all)')
        twist.add_argument('-o', '--output', help='Output file (default: stdout)')

        check = actions.add_parser('check', help='Run identity checks')
        check.add_argument('checks', nargs='+', choices=CHECK_NAMES + ('all',), help='Checks to run')
        check.add_argument('--N', dest='rank', type=int, required=True, help='Twist rank N')
        check.add_argument('--numeric', help='JSON assignment file; forces numeric mode')
        check.add_argument('--samples', type=int, help='Number of generic assignments')
        check.add_argument('--symbolic', action='store_true', help='Run symbolically whatever N is')
        check.add_argument('--report', help='Report file (default: stdout)')

    def handle(self, *args, **options):
        try:
            if options['action'] == 'gen':
                self.generate(options)
            else:
                self.run_checks(options)
        except RMatrixError as e:
            raise CommandError(f'{e.error_code}: {e.message}', returncode=1)

    def generate(self, options):
        target = options['target']
        if target == 'rs':
            if options['n'] < 2:
                raise CommandError('--n must be at least 2', returncode=2)
            field = Field(VarTable(('s',)))
            builder = r_standard_factorized if options['factorized'] else r_standard_direct
            payload = MatrixSerializer(builder(options['n'], field)).data
        elif target == 'rfg':
            rank = self.checked_rank(options)
            field = Field.symbolic(rank)
            if options['params']:
                field = Field(VarTable.for_rank(rank), self.read_assignment(options['params'], rank))
            payload = MatrixSerializer(esoteric_r_matrix(rank, field)).data
        else:
            rank = self.checked_rank(options)
            stages = (1, 2, 3) if options['stage'] == 'all' else (int(options['stage']),)
            element = build_twist(TwistParams.symbolic(rank), stages)
            payload = TwistElementSerializer(element).data
        self.write(payload, options['output'])

    def run_checks(self, options):
        rank = self.checked_rank(options)
        if options['samples'] is not None and options['samples'] < 1:
            raise CommandError('--samples must be positive', returncode=2)
        assignment = self.read_assignment(options['numeric'], rank) if options['numeric'] else None
        if rank != 1 and 'compare-cg' in options['checks']:
            raise CommandError('compare-cg is defined for N=1 only', returncode=2)

        service = VerificationService(
            rank,
            assignment=assignment,
            samples=options['samples'],
            symbolic=options['symbolic'],
        )
        reports = service.run(options['checks'])
        data = CheckReportSerializer(reports, many=True).data
        self.write(data[0] if len(data) == 1 else list(data), options['report'])

        failed = [report.check for report in reports if not report.passed]
        if failed:
            raise CommandError(f'Failed checks: {", ".join(failed)}', returncode=1)
        self.stderr.write(self.style.SUCCESS(f'{len(reports)} checks passed'))

    def checked_rank(self, options):
        if options['rank'] < 1:
            raise CommandError('--N must be a positive integer', returncode=2)
        return options['rank']

    def read_assignment(self, path, rank):
        """
        Parse an assignment file that binds every variable of ``rank``.
        """
        try:
            data = json.loads(Path(path).read_text())
        except (OSError, ValueError) as e:
            raise CommandError(f'Cannot read assignment file {path}: {e}', returncode=2)
        serializer = AssignmentSerializer(data=data, required_names=VarTable.for_rank(rank).names)
        if not serializer.is_valid():
            raise CommandError(f'Invalid assignment in {path}: {dict(serializer.errors)}', returncode=2)
        return serializer.validated_data

    def write(self, payload, path=None):
        text = json.dumps(payload, indent=2, sort_keys=True)
        if path:
            Path(path).write_text(text + '\n')
        else:
            self.stdout.write(text)
