"""
Tests for identity checks and the verification runner.
"""

from unittest import mock

from django.test import SimpleTestCase, override_settings

from core.exceptions import SubstitutionPoleError, UnknownCheckError
from field.elements import Field, VarTable
from linalg.sparse import SparseMatrix
from linalg.tensor import basis_index
from twisting.builders import TwistParams, build_F1, build_F2, build_F3, build_twist
from twisting.factors import compose
from twisting.rmatrix import cg3_reference
from twisting.services import EsotericConstruction
from verification import checks
from verification.reports import NUMERIC, SYMBOLIC, CheckReport
from verification.serializers import CheckReportSerializer
from verification.services import VerificationService, expand_check_names, generic_assignment


def numeric_construction(rank, offset=0):
    field = Field(VarTable.for_rank(rank), generic_assignment(rank, offset))
    return EsotericConstruction(rank, field)


class SymbolicChecksTest(SimpleTestCase):
    """
    Test cases for the checks on the symbolic N = 1 construction.
    """

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.construction = EsotericConstruction(1)

    def test_ybe(self):
        """
        Test the Yang-Baxter equation for R_S and R_FG.
        """
        self.assertTrue(checks.check_ybe(self.construction.r_standard).passed)
        report = checks.check_ybe(self.construction.r_fg)
        self.assertTrue(report.passed)
        self.assertIsNone(report.witness)
        self.assertEqual(report.mode, SYMBOLIC)

    def test_cocycle(self):
        """
        Test the cocycle identity for F and for each Cartan stage.
        """
        construction = self.construction
        self.assertTrue(checks.check_cocycle(construction.twist).passed)
        self.assertTrue(checks.check_cocycle(construction.f1).passed)
        self.assertTrue(checks.check_cocycle(construction.f3).passed)

    def test_factorization(self):
        """
        Test the F2 factorization against the F1-twisted coproduct.
        """
        report = checks.check_factorization(self.construction.f2, self.construction.f1)
        self.assertTrue(report.passed, report.witness)
        self.assertEqual(report.details, {'left': True, 'right': True})
        self.assertTrue(checks.check_factorization(self.construction.f1).passed)

    def test_hecke(self):
        """
        Test the Hecke relation for R_S and R_FG.
        """
        self.assertTrue(checks.check_hecke(self.construction.r_standard).passed)
        self.assertTrue(checks.check_hecke(self.construction.r_fg).passed)

    def test_intertwiner(self):
        """
        Test R Delta = Delta^op R with the plain and the twisted coproduct.
        """
        construction = self.construction
        self.assertTrue(checks.check_intertwiner(construction.r_standard, construction.rep).passed)
        report = checks.check_intertwiner(construction.r_fg, construction.rep, construction.twist)
        self.assertTrue(report.passed, report.witness)

    def test_compare_cg(self):
        """
        Test the gl(3) coincidence with its substitution.
        """
        report = checks.check_compare_cg(self.construction.r_fg)
        self.assertTrue(report.passed, report.witness)
        self.assertEqual(report.details['substitution'], {'p': '(1)/(s^2*b1^2)', 'nu': 's^2*mu1*b1^2'})
        self.assertEqual(report.details['entries'], 81)

    def test_param_count(self):
        """
        Test that R_FG for N = 1 uses s, mu1 and b1.
        """
        report = checks.check_param_count(1, self.construction.r_fg)
        self.assertTrue(report.passed)
        self.assertEqual(report.details['variables'], ['s', 'mu1', 'b1'])

    def test_rll(self):
        """
        Test RLL for both L-matrix families.
        """
        report = checks.check_twisted_rll(self.construction)
        self.assertTrue(report.passed, report.witness)
        self.assertEqual(set(report.details), {'standard+', 'standard-', 'twisted+', 'twisted-'})

    def test_counit(self):
        """
        Test the counit on every factor of F.
        """
        report = checks.check_counit(self.construction.twist)
        self.assertTrue(report.passed)
        self.assertEqual(report.details['factors'], len(self.construction.twist.factors))

    def test_lmatrix_identity(self):
        """
        Test L+-_CG against R_FG and its inverse.
        """
        report = checks.check_lmatrix_identity(self.construction.r_standard, self.construction.twist)
        self.assertTrue(report.passed, report.witness)

    def test_relations(self):
        """
        Test the defining relations in the vector representation.
        """
        self.assertTrue(checks.check_relations(self.construction.rep).passed)


class NegativeControlTest(SimpleTestCase):
    """
    Test cases where checks must fail.
    """

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.construction = EsotericConstruction(1)

    def test_corrupted_r_matrix(self):
        """
        Test that an extra entry in R_FG breaks Yang-Baxter.
        """
        r_fg = self.construction.r_fg
        field = r_fg.field
        corrupted = r_fg.with_entry(0, 8, field.one)
        report = checks.check_ybe(corrupted)
        self.assertFalse(report.passed)
        self.assertEqual(set(report.witness), {'row', 'col', 'lhs', 'rhs'})
        self.assertNotEqual(report.witness['lhs'], report.witness['rhs'])

    def test_identity_is_not_hecke(self):
        """
        Test that the identity fails the Hecke relation.
        """
        identity = SparseMatrix.identity(self.construction.field, 9)
        self.assertFalse(checks.check_hecke(identity).passed)

    def test_untwisted_coproduct(self):
        """
        Test that R_FG does not intertwine the plain coproduct.
        """
        report = checks.check_intertwiner(self.construction.r_fg, self.construction.rep)
        self.assertFalse(report.passed)
        self.assertIn('generator', report.details)

    def test_wrong_sign_reference(self):
        """
        Test that a sign-flipped reference is reported with a witness.
        """
        def wrong_sign(field, p=None, nu=None):
            matrix = cg3_reference(field, p, nu)
            row, col = basis_index((1, 3), 3), basis_index((2, 2), 3)
            return matrix.with_entry(row, col, -matrix.get(row, col))

        report = checks.check_compare_cg(self.construction.r_fg, wrong_sign)
        self.assertFalse(report.passed)
        self.assertEqual(report.witness['row'], 7)

    def test_reordered_f2(self):
        """
        Test that reversing the F2 root order breaks the cocycle for N = 2.
        """
        field = numeric_construction(2).field
        params = TwistParams(2, field)
        roots = [(2, 3), (1, 3), (1, 2)]
        twist = compose(build_F3(params), build_F2(params, root_order=roots), build_F1(2, field))
        self.assertFalse(checks.check_cocycle(twist).passed)
        self.assertTrue(checks.check_cocycle(build_twist(params)).passed)

    def test_report_requires_witness_on_failure(self):
        """
        Test the pass/witness invariant.
        """
        with self.assertRaises(ValueError):
            CheckReport(check='ybe', passed=False, mode=SYMBOLIC)
        with self.assertRaises(ValueError):
            CheckReport(check='ybe', passed=True, mode=SYMBOLIC, witness={'row': 1})


class NumericChecksTest(SimpleTestCase):
    """
    Test cases at generic rational points for N = 2 and 3.
    """

    def test_rank_two(self):
        """
        Test YBE, Hecke and counit for N = 2.
        """
        construction = numeric_construction(2)
        self.assertTrue(checks.check_ybe(construction.r_fg).passed)
        self.assertTrue(checks.check_hecke(construction.r_fg).passed)
        self.assertTrue(checks.check_counit(construction.twist).passed)
        self.assertEqual(construction.r_fg.field.mode, NUMERIC)

    def test_cartan_stage_cocycle(self):
        """
        Test that F1 alone satisfies the cocycle identity for N = 2 and 3.
        """
        for rank in (2, 3):
            report = checks.check_cocycle(EsotericConstruction(rank).f1)
            self.assertTrue(report.passed, (rank, report.witness))
            self.assertEqual(report.mode, SYMBOLIC)

    def test_rank_two_intertwiner(self):
        """
        Test the twisted intertwiner for N = 2.
        """
        construction = numeric_construction(2, offset=1)
        report = checks.check_intertwiner(construction.r_fg, construction.rep, construction.twist)
        self.assertTrue(report.passed, report.witness)

    def test_param_counts(self):
        """
        Test 6 variables for N = 2 and 10 for N = 3.
        """
        report = checks.check_param_count(2)
        self.assertTrue(report.passed, report.witness)
        self.assertEqual(report.details['variables'], ['s', 'mu1', 'mu2', 'a1_2', 'b1', 'b2'])

        report = checks.check_param_count(3)
        self.assertTrue(report.passed, report.witness)
        self.assertEqual(report.details['expected'], 10)


@override_settings(VERIFICATION_REPORT_TIMINGS=False)
class VerificationServiceTest(SimpleTestCase):
    """
    Test cases for the runner.
    """

    def test_generic_assignment(self):
        """
        Test consecutive primes in the order s, mu, b, a.
        """
        self.assertEqual(
            generic_assignment(2),
            {'s': 2, 'mu1': 3, 'mu2': 5, 'b1': 7, 'b2': 11, 'a1_2': 13},
        )
        self.assertEqual(generic_assignment(1, offset=2), {'s': 5, 'mu1': 7, 'b1': 11})

    def test_expand_names(self):
        """
        Test that 'all' skips compare-cg away from N = 1.
        """
        self.assertIn('compare-cg', expand_check_names(['all'], 1))
        self.assertNotIn('compare-cg', expand_check_names(['all'], 2))
        self.assertEqual(expand_check_names(['ybe', 'cocycle', 'ybe'], 1), ['cocycle', 'ybe'])
        with self.assertRaises(UnknownCheckError):
            expand_check_names(['nothing'], 1)

    def test_mode_policy(self):
        """
        Test symbolic and numeric mode selection.
        """
        self.assertEqual(VerificationService(1).mode_for('ybe'), SYMBOLIC)
        self.assertEqual(VerificationService(2).mode_for('ybe'), NUMERIC)
        self.assertEqual(VerificationService(2).mode_for('param-count'), SYMBOLIC)
        self.assertEqual(VerificationService(2, symbolic=True).mode_for('ybe'), SYMBOLIC)
        assignment = generic_assignment(1)
        self.assertEqual(VerificationService(1, assignment=assignment).mode_for('ybe'), NUMERIC)

    def test_rank_one_all(self):
        """
        Test that every check passes symbolically for N = 1.
        """
        reports = VerificationService(1).run(['all'])
        self.assertEqual([report.check for report in reports], expand_check_names(['all'], 1))
        for report in reports:
            self.assertTrue(report.passed, (report.check, report.witness))
            self.assertEqual(report.rank, 1)
            self.assertEqual(report.millis, 0)
            self.assertIsNone(report.assignments)

    def test_cocycle_samples(self):
        """
        Test the cocycle for N = 2 and N = 3 at three distinct assignments.
        """
        for rank in (2, 3):
            report = VerificationService(rank, samples=3).run_check('cocycle')
            self.assertTrue(report.passed, report.witness)
            self.assertEqual(report.mode, NUMERIC)
            self.assertEqual(len(report.assignments), 3)
            self.assertEqual(len({tuple(sorted(a.items())) for a in report.assignments}), 3)

    def test_rank_two_samples(self):
        """
        Test YBE, factorization and Hecke for N = 2 at three assignments.
        """
        service = VerificationService(2, samples=3)
        for name in ('ybe', 'factorization', 'hecke'):
            report = service.run_check(name)
            self.assertTrue(report.passed, (name, report.witness))
            self.assertEqual(report.mode, NUMERIC)
            self.assertEqual(len(report.assignments), 3)
        self.assertEqual(service.run_check('hecke').details, {'standard': True, 'twisted': True})

    def test_explicit_assignment(self):
        """
        Test that an explicit assignment is used as given.
        """
        assignment = {'s': '3/2', 'mu1': '-2', 'b1': '5/3'}
        report = VerificationService(1, assignment=assignment).run_check('ybe')
        self.assertTrue(report.passed)
        self.assertEqual(report.assignments, [{'s': '3/2', 'mu1': '-2', 'b1': '5/3'}])

    def test_retry_on_pole(self):
        """
        Test that a pole moves on to the next prime tuple.
        """
        real = checks.check_hecke
        calls = []

        def flaky(r_matrix):
            calls.append(r_matrix.field.assignment['s'])
            if len(calls) == 1:
                raise SubstitutionPoleError()
            return real(r_matrix)

        with mock.patch('verification.checks.check_hecke', side_effect=flaky):
            report = VerificationService(2).run_check('hecke')
        self.assertTrue(report.passed)
        self.assertEqual(report.assignments[0]['s'], '3')

    def test_compare_cg_needs_rank_one(self):
        """
        Test that compare-cg is refused for N = 2.
        """
        with self.assertRaises(UnknownCheckError):
            VerificationService(2).run_check('compare-cg')

    def test_deterministic_reports(self):
        """
        Test that two runs serialize identically.
        """
        first = CheckReportSerializer(VerificationService(2).run(['ybe', 'hecke']), many=True).data
        second = CheckReportSerializer(VerificationService(2).run(['ybe', 'hecke']), many=True).data
        self.assertEqual(first, second)
        self.assertEqual(
            sorted(first[0]),
            ['N', 'assignments', 'check', 'details', 'millis', 'mode', 'pass', 'witness'],
        )
        self.assertEqual(first[0]['check'], 'hecke')
