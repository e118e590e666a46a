"""
Tests for the standard R-matrix, the twist stages and R_FG.
"""

import json
from fractions import Fraction
from unittest import mock

from django.conf import settings
from django.test import SimpleTestCase
from rest_framework import serializers

from core.exceptions import (
    FactorizationMismatchError,
    FractionalExponentError,
    IncompatibleTwistError,
    InconsistentParameterSystemError,
)
from field.elements import Field, VarTable
from linalg.serializers import MatrixSerializer
from linalg.sparse import SparseMatrix
from linalg.tensor import basis_index, kron
from qgroup.cartan import CartanVector
from qgroup.representations import FundamentalRep
from qgroup.words import q_power
from twisting.builders import (
    TwistParams,
    build_F1,
    build_F1_gl3,
    build_F2,
    build_F3,
    build_twist,
    twisted_lower,
    twisted_raise,
)
from twisting.factors import CartanExp, TwistElement, compose
from twisting.rmatrix import cg3_reference, r_standard_direct, r_standard_factorized
from twisting.serializers import TwistElementSerializer
from twisting.services import (
    EsotericConstruction,
    inverse_cross_check,
    match_parameters,
    twist_R,
    twisted_coproduct,
)


def load_fixture(name):
    with open(settings.GOLDEN_FIXTURES_DIR / name) as handle:
        return json.load(handle)


def numeric_field(rank):
    table = VarTable.for_rank(rank)
    return Field(table, {name: value for name, value in zip(table, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29))})


class StandardRMatrixTest(SimpleTestCase):
    """
    Test cases for R_S.
    """

    def setUp(self):
        self.field = Field(VarTable(('s',)))

    def test_entry_count(self):
        """
        Test n + n(n-1) + n(n-1)/2 nonzero entries.
        """
        for n in (2, 3, 4):
            self.assertEqual(r_standard_direct(n, self.field).nnz, n + n * (n - 1) + n * (n - 1) // 2)

    def test_golden_gl3(self):
        """
        Test R_S for gl(3) against the golden matrix.
        """
        data = MatrixSerializer(r_standard_direct(3, self.field)).data
        self.assertEqual(data, load_fixture('gl3_r_standard.json'))

    def test_factorized_equals_direct(self):
        """
        Test the root factorization for n = 2, 3, 5, 7.
        """
        for n in (2, 3, 5, 7):
            self.assertEqual(r_standard_factorized(n, self.field), r_standard_direct(n, self.field))

    def test_factorization_mismatch(self):
        """
        Test that a wrong universal form raises with a witness.
        """
        empty = TwistElement(3, self.field, (), 'R_S')
        with mock.patch('twisting.rmatrix.standard_universal', return_value=empty):
            with self.assertRaises(FactorizationMismatchError) as raised:
                r_standard_factorized(3, self.field)
        self.assertEqual(raised.exception.details['row'], 1)


class TwistStageTest(SimpleTestCase):
    """
    Test cases for the twist builders.
    """

    def setUp(self):
        self.params = TwistParams.symbolic(1)
        self.field = self.params.field

    def test_params(self):
        """
        Test parameter products and counts.
        """
        params = TwistParams.symbolic(2)
        self.assertEqual(params.mu_root((1, 3)), params.mu(1) * params.mu(2))
        self.assertEqual([TwistParams.symbolic(rank).parameter_count for rank in (1, 2, 3)], [3, 6, 10])
        self.assertEqual(params.variable_names, ('s', 'mu1', 'mu2', 'a1_2', 'b1', 'b2'))

    def test_f1_forms_agree(self):
        """
        Test that both forms of F1 agree for N = 1.
        """
        self.assertEqual(build_F1(1, self.field).matrix, build_F1_gl3(self.field).matrix)

    def test_f2_rank_one(self):
        """
        Test F2 = q^2 at v1 (x) v3 plus mu s^2 E_12 (x) E_32.
        """
        field = self.field
        f2 = build_F2(self.params).matrix
        at_13, at_22 = basis_index((1, 3), 3), basis_index((2, 2), 3)
        expected = SparseMatrix.identity(field, 9).with_entry(at_13, at_13, field.q_power(2))
        expected = expected.with_entry(at_13, at_22, self.params.mu(1) * field.q)
        self.assertEqual(f2, expected)

    def test_f3_is_diagonal(self):
        """
        Test that F3 is diagonal with b1^{x(a) - x(b)}.
        """
        f3 = build_F3(self.params).matrix
        self.assertTrue(f3.is_diagonal)
        self.assertFalse(build_F2(self.params).matrix.is_diagonal)
        at_13 = basis_index((1, 3), 3)
        self.assertEqual(f3.get(at_13, at_13), self.params.b(1) ** 2)

    def test_factorwise_inverse(self):
        """
        Test the factor-wise inverse against Gauss-Jordan.
        """
        self.assertTrue(inverse_cross_check(build_twist(self.params)))
        self.assertTrue(inverse_cross_check(build_twist(TwistParams(2, numeric_field(2)))))

    def test_stage_selection(self):
        """
        Test stage subsets and labels.
        """
        self.assertEqual(build_twist(self.params).label, 'F3F2F1')
        self.assertEqual(build_twist(self.params, (1,)).matrix, build_F1(1, self.field).matrix)
        with self.assertRaises(IncompatibleTwistError):
            build_twist(self.params, (4,))

    def test_compose_rejects_mixed_fields(self):
        """
        Test that elements over different fields do not compose.
        """
        with self.assertRaises(IncompatibleTwistError):
            compose(build_F1(1, self.field), build_F1(1, numeric_field(1)))

    def test_fractional_exponent(self):
        """
        Test that q^{E_11 (x) E_11 / 4} is rejected.
        """
        unit = CartanVector.unit(3, 1)
        factor = CartanExp(((Fraction(1, 4), unit, unit),))
        element = TwistElement(3, self.field, (factor,))
        with self.assertRaises(FractionalExponentError):
            element.evaluate()


class TwistedCoproductTest(SimpleTestCase):
    """
    Test cases for the coproduct twisted by F1.
    """

    def assert_displays(self, rank, field):
        n = 2 * rank + 1
        rep = FundamentalRep(field, n)
        f1 = build_F1(rank, field)
        raise_word, lower_word = twisted_raise(rank), twisted_lower(rank)
        e_tilde, f_tilde = rep.image(raise_word), rep.image(lower_word)
        left_power = rep.image(q_power(CartanVector.unit(n, rank) + CartanVector.top(n, rank)))
        right_power = rep.image(q_power(CartanVector.unit(n, rank + 2) + CartanVector.bottom(n, rank)))
        self.assertEqual(
            twisted_coproduct(f1, raise_word),
            kron(e_tilde, left_power) + kron(rep.identity(), e_tilde),
        )
        self.assertEqual(
            twisted_coproduct(f1, lower_word),
            kron(f_tilde, rep.identity()) + kron(right_power, f_tilde),
        )

    def test_rank_one(self):
        """
        Test the twisted coproducts of e~_1 and f~_2.
        """
        self.assert_displays(1, Field.symbolic(1))

    def test_rank_two(self):
        """
        Test the twisted coproducts of e~_2 and f~_3.
        """
        self.assert_displays(2, Field.symbolic(2))


class EsotericRMatrixTest(SimpleTestCase):
    """
    Test cases for R_FG.
    """

    def test_golden_rank_one(self):
        """
        Test symbolic R_FG for N = 1 against the golden matrix.
        """
        data = MatrixSerializer(EsotericConstruction(1).r_fg).data
        self.assertEqual(data, load_fixture('gl3_r_fg.json'))

    def test_reference_golden(self):
        """
        Test the gl(3) reference matrix in p and nu.
        """
        field = Field(VarTable(('s', 'p', 'nu')))
        self.assertEqual(MatrixSerializer(cg3_reference(field)).data, load_fixture('gl3_cremmer_gervais.json'))

    def test_match_parameters(self):
        """
        Test p = s^-2 b1^-2 and nu = mu1 s^2 b1^2.
        """
        joint, solutions = match_parameters(EsotericConstruction(1).r_fg)
        self.assertEqual(joint.canonical_string(solutions['p']), '(1)/(s^2*b1^2)')
        self.assertEqual(joint.canonical_string(solutions['nu']), 's^2*mu1*b1^2')

    def test_wrong_sign_reference(self):
        """
        Test that a sign-flipped reference has no solution.
        """
        def wrong_sign(field, p=None, nu=None):
            matrix = cg3_reference(field, p, nu)
            row, col = basis_index((1, 3), 3), basis_index((2, 2), 3)
            return matrix.with_entry(row, col, -matrix.get(row, col))

        with self.assertRaises(InconsistentParameterSystemError) as raised:
            match_parameters(EsotericConstruction(1).r_fg, wrong_sign)
        self.assertEqual(raised.exception.details['row'], 7)

    def test_numeric_matches_specialized_symbolic(self):
        """
        Test that building numerically equals specializing the symbolic matrix.
        """
        field = numeric_field(1)
        symbolic = EsotericConstruction(1).r_fg
        self.assertEqual(EsotericConstruction(1, field).r_fg, symbolic.specialize(field))

    def test_l_matrix_blocks(self):
        """
        Test the leg-one blocks of L+_S for gl(3).
        """
        construction = EsotericConstruction(1)
        blocks = construction.l_matrices.blocks('plus_standard')
        field = construction.field
        self.assertEqual(blocks[(1, 1)], SparseMatrix.diagonal(field, [field.q, field.one, field.one]))
        self.assertEqual(blocks[(1, 2)], SparseMatrix.unit(field, 3, 1, 0, field.omega))
        self.assertNotIn((2, 1), blocks)

    def test_plus_twisted_is_r_fg(self):
        """
        Test L+_CG = R_FG.
        """
        construction = EsotericConstruction(1)
        self.assertEqual(construction.l_matrices.plus_twisted, construction.r_fg)
        self.assertEqual(twist_R(construction.twist, construction.r_standard), construction.r_fg)


class TwistSerializerTest(SimpleTestCase):
    """
    Test cases for the twist element JSON format.
    """

    def round_trip(self, element):
        first = json.dumps(TwistElementSerializer(element).data, sort_keys=True)
        serializer = TwistElementSerializer(data=json.loads(first))
        self.assertTrue(serializer.is_valid(), serializer.errors)
        loaded = serializer.save()
        second = json.dumps(TwistElementSerializer(loaded).data, sort_keys=True)
        return first, second, loaded

    def test_symbolic_round_trip(self):
        """
        Test that dump -> load -> dump is bit-exact for F at N = 2.
        """
        element = build_twist(TwistParams.symbolic(2))
        first, second, loaded = self.round_trip(element)
        self.assertEqual(first, second)
        self.assertEqual(loaded.matrix, element.matrix)

    def test_numeric_round_trip(self):
        """
        Test that numeric twists keep their assignment.
        """
        element = build_twist(TwistParams(1, numeric_field(1)))
        first, second, loaded = self.round_trip(element)
        self.assertEqual(first, second)
        self.assertEqual(loaded.field, element.field)

    def test_malformed_factor(self):
        """
        Test that unknown factor kinds are rejected.
        """
        serializer = TwistElementSerializer(
            data={'n': 3, 'label': 'F', 'variables': ['s'], 'factors': [{'kind': 'other'}]}
        )
        self.assertTrue(serializer.is_valid(), serializer.errors)
        with self.assertRaises(serializers.ValidationError):
            serializer.save()
