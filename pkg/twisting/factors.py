"""
Twist factors and ordered twist elements.

A ``TwistElement`` is a left-to-right product of factors in U (x) U. Each
factor knows how to evaluate itself on A (x) B for any two
representations A and B; with A or B a ``TensorRep`` this gives the
coproduct-pushed forms (Delta (x) id)(F) and (id (x) Delta)(F), and with a
``TrivialRep`` the counit.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from core.exceptions import FractionalExponentError, IncompatibleTwistError
from linalg.qexp import qexp_nilpotent
from linalg.sparse import SparseMatrix
from linalg.tensor import embed_legs, flip_conjugate, kron
from qgroup.representations import FundamentalRep, TensorRep, TrivialRep

logger = logging.getLogger('esoteric_rmatrix.twisting')


@dataclass(frozen=True)
class CartanExp:
    """
    q^{sum c D (x) D'} * prod_p p^{sum k D (x) D'}.

    ``q_terms`` holds (c, D, D') with rational c; ``parameter_terms`` holds
    (variable name, integer k, D, D').
    """
    q_terms: tuple = ()
    parameter_terms: tuple = ()

    def evaluate(self, first, second):
        """
        Diagonal image on first (x) second.
        """
        field = first.field
        left_weights = [first.weight(index) for index in range(first.dim)]
        right_weights = [second.weight(index) for index in range(second.dim)]
        values = []
        for left in left_weights:
            for right in right_weights:
                s_exponent = 2 * sum(
                    (Fraction(c) * d.pair(left) * d_prime.pair(right) for c, d, d_prime in self.q_terms),
                    Fraction(0),
                )
                if s_exponent.denominator != 1:
                    raise FractionalExponentError(f'Cartan factor has s-exponent {s_exponent}')
                exponents = {}
                for name, k, d, d_prime in self.parameter_terms:
                    exponents[name] = exponents.get(name, Fraction(0)) + k * d.pair(left) * d_prime.pair(right)
                if any(exponent.denominator != 1 for exponent in exponents.values()):
                    raise FractionalExponentError(f'Cartan factor has parameter exponents {exponents}')
                value = field.s_power(int(s_exponent))
                value = value * field.monomial({name: int(exponent) for name, exponent in exponents.items()})
                values.append(value)
        return SparseMatrix.diagonal(field, values)

    def inverse(self):
        """Negate every exponent."""
        return CartanExp(
            tuple((-Fraction(c), d, d_prime) for c, d, d_prime in self.q_terms),
            tuple((name, -k, d, d_prime) for name, k, d, d_prime in self.parameter_terms),
        )


@dataclass(frozen=True)
class QExpFactor:
    """
    exp_{q^base_exp}(c X (x) Y) for words X, Y.
    """
    coefficient: object
    left: object
    right: object
    base_exp: int

    def evaluate(self, first, second):
        """Truncated q-exponential of the image on first (x) second."""
        argument = kron(first.image(self.left), second.image(self.right))
        return qexp_nilpotent(self.coefficient, argument, first.field.q_power(self.base_exp))

    def inverse(self):
        # exp_b(x)^-1 = exp_{1/b}(-x)
        return QExpFactor(-self.coefficient, self.left, self.right, -self.base_exp)


@dataclass(frozen=True)
class TwistElement:
    """
    Ordered product of Cartan and q-exponential factors acting on V (x) V
    for gl(n), n = 2N+1.
    """
    n: int
    field: object
    factors: tuple
    label: str = 'F'

    @property
    def rank(self):
        return (self.n - 1) // 2

    @cached_property
    def rep(self):
        return FundamentalRep(self.field, self.n)

    def evaluate(self, first=None, second=None):
        """
        Product of the factor images on first (x) second, defaulting to V (x) V.
        """
        first = first or self.rep
        second = second or self.rep
        result = SparseMatrix.identity(self.field, first.dim * second.dim)
        for factor in self.factors:
            result = result @ factor.evaluate(first, second)
        return result

    @cached_property
    def matrix(self):
        """(rho (x) rho)(F) on V (x) V."""
        matrix = self.evaluate()
        logger.debug('Evaluated %s on V(x)V: %d entries', self.label, matrix.nnz)
        return matrix

    @cached_property
    def flipped_matrix(self):
        """F_21 on V (x) V."""
        return flip_conjugate(self.matrix)

    def inverse(self):
        """Factor-wise inverse in reversed order."""
        return TwistElement(
            self.n,
            self.field,
            tuple(factor.inverse() for factor in reversed(self.factors)),
            f'{self.label}^-1',
        )

    def on_legs(self, legs, total):
        """F placed on two legs of V^{(x)total}."""
        return embed_legs(self.matrix, legs, total, self.n)

    def pushed_left(self):
        """(Delta (x) id)(F) on V^{(x)3}."""
        return self.evaluate(TensorRep(self.rep, self.rep), self.rep)

    def pushed_right(self):
        """(id (x) Delta)(F) on V^{(x)3}."""
        return self.evaluate(self.rep, TensorRep(self.rep, self.rep))

    def counit_left(self):
        """(epsilon (x) id)(F), which is the identity for a counital twist."""
        return self.evaluate(TrivialRep(self.field, self.n), self.rep)

    def counit_right(self):
        """(id (x) epsilon)(F)."""
        return self.evaluate(self.rep, TrivialRep(self.field, self.n))


def compose(*elements):
    """
    Product of twist elements, left to right.
    """
    if not elements:
        raise IncompatibleTwistError('Nothing to compose')
    first = elements[0]
    for element in elements[1:]:
        if element.n != first.n or element.field != first.field:
            raise IncompatibleTwistError(f'Cannot compose {first.label} with {element.label}')
    return TwistElement(
        first.n,
        first.field,
        tuple(factor for element in elements for factor in element.factors),
        ''.join(element.label for element in elements),
    )
