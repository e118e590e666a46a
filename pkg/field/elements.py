"""
Exact coefficient field for R-matrix entries.

Symbolic elements are sympy fraction-field elements over ZZ in the
variables of a VarTable. sympy cancels on every operation, so equal
values share one canonical numerator/denominator pair. Numeric-rational
elements are plain ``QQ`` values obtained by binding every variable to a
rational at construction time.

q is never a variable: it is always s**2, and omega = q - 1/q.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from sympy import Symbol, sympify
from sympy.polys.domains import ZZ, QQ
from sympy.polys.fields import field as fraction_field

from core.exceptions import AssignmentError, DivisionByZeroError, SubstitutionPoleError

logger = logging.getLogger('esoteric_rmatrix.field')


@dataclass(frozen=True)
class VarTable:
    """
    Ordered variable names of a computation.
    """
    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        if len(set(names)) != len(names):
            raise AssignmentError(f'Duplicate variable names in {names}')
        if 's' not in names:
            raise AssignmentError('Variable table must contain "s"')
        object.__setattr__(self, 'names', names)

    @classmethod
    def for_rank(cls, rank):
        """
        Variables of the rank-N twist: s, mu1..muN, a{i}_{k} for i < k, b1..bN.
        """
        names = ['s']
        names += [f'mu{k}' for k in range(1, rank + 1)]
        names += [f'a{i}_{k}' for i, k in combinations(range(1, rank + 1), 2)]
        names += [f'b{i}' for i in range(1, rank + 1)]
        return cls(tuple(names))

    def extended(self, *names):
        return VarTable(self.names + tuple(name for name in names if name not in self.names))

    def __contains__(self, name):
        return name in self.names

    def __iter__(self):
        return iter(self.names)

    def __len__(self):
        return len(self.names)


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


class Field:
    """
    Coefficient field context, symbolic or bound to a rational assignment.
    """

    def __init__(self, table, assignment=None):
        self.table = table
        if assignment is None:
            self.domain, *gens = fraction_field(','.join(table.names), ZZ)
            self.assignment = None
            self._gens = dict(zip(table.names, gens))
        else:
            self.domain = QQ
            self.assignment = self._coerce_assignment(table, assignment)
            self._gens = {
                name: QQ(value.numerator, value.denominator)
                for name, value in self.assignment.items()
            }

    @staticmethod
    def _coerce_assignment(table, assignment):
        missing = [name for name in table.names if name not in assignment]
        if missing:
            raise AssignmentError(
                f'Assignment does not cover {", ".join(missing)}',
                details={'missing': missing},
            )
        extra = sorted(set(assignment) - set(table.names))
        if extra:
            logger.debug('Ignoring assignment entries outside the variable table: %s', extra)
        try:
            return {name: Fraction(str(assignment[name])) for name in table.names}
        except (ValueError, ZeroDivisionError) as exc:
            raise AssignmentError(f'Assignment values must be exact rationals: {exc}')

    @classmethod
    def symbolic(cls, rank):
        return cls(VarTable.for_rank(rank))

    def numeric(self, assignment):
        return Field(self.table, assignment)

    @property
    def is_symbolic(self):
        return self.assignment is None

    @property
    def mode(self):
        return 'symbolic' if self.is_symbolic else 'numeric-rational'

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.table == other.table
            and self.assignment == other.assignment
        )

    def __hash__(self):
        frozen = None if self.assignment is None else tuple(sorted(self.assignment.items()))
        return hash((self.table, frozen))

    def __repr__(self):
        return f'Field({", ".join(self.table.names)}; {self.mode})'

    # Constants and generators

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def gen(self, name):
        try:
            return self._gens[name]
        except KeyError:
            raise AssignmentError(f'Variable "{name}" is not part of {self!r}')

    def from_int(self, value):
        return self.one * int(value)

    def from_rational(self, value):
        value = Fraction(value)
        return self.from_int(value.numerator) / self.from_int(value.denominator)

    @property
    def s(self):
        return self.gen('s')

    @property
    def q(self):
        return self.s * self.s

    @property
    def omega(self):
        return self.q - self.one / self.q

    def power(self, value, exponent):
        """
        Integer power; negative exponents divide so the result stays canonical.
        """
        if exponent >= 0:
            return value ** exponent
        return self.div(self.one, value ** (-exponent))

    def s_power(self, exponent):
        return self.power(self.s, exponent)

    def q_power(self, exponent):
        return self.power(self.s, 2 * exponent)

    def monomial(self, exponents):
        result = self.one
        for name, exponent in exponents.items():
            if exponent:
                result = result * self.power(self.gen(name), exponent)
        return result

    def div(self, numerator, denominator):
        if not denominator:
            raise DivisionByZeroError(f'Division of {self.canonical_string(numerator)} by zero')
        return numerator / denominator

    def inverse(self, value):
        return self.div(self.one, value)

    # Canonical form

    def normalize(self, value):
        if not self.is_symbolic:
            return value
        return self.domain.new(value.numer, value.denom)

    def canonical_string(self, value):
        if not self.is_symbolic:
            return format_rational(Fraction(int(QQ.numer(value)), int(QQ.denom(value))))
        numer, denom = value.numer, value.denom
        if denom.is_ground:
            return self._format_poly(numer, Fraction(1, int(denom.LC)))
        return f'({self._format_poly(numer)})/({self._format_poly(denom)})'

    def _format_poly(self, poly, scale=Fraction(1)):
        pieces = []
        for monom, coeff in poly.terms():
            coefficient = Fraction(int(coeff)) * scale
            body = '*'.join(
                name if exponent == 1 else f'{name}^{exponent}'
                for name, exponent in zip(self.table.names, monom)
                if exponent
            )
            if not body:
                piece = format_rational(coefficient)
            elif coefficient == 1:
                piece = body
            elif coefficient == -1:
                piece = '-' + body
            else:
                piece = f'{format_rational(coefficient)}*{body}'
            if pieces and not piece.startswith('-'):
                piece = '+' + piece
            pieces.append(piece)
        return ''.join(pieces) or '0'

    def parse(self, text):
        """
        Read a canonical string back into this field.
        """
        if not self.is_symbolic:
            try:
                value = Fraction(text)
            except (ValueError, ZeroDivisionError):
                raise AssignmentError(f'"{text}" is not a rational number')
            return QQ(value.numerator, value.denominator)
        symbols = {name: Symbol(name) for name in self.table.names}
        try:
            expression = sympify(text.replace('^', '**'), locals=symbols)
            return self.domain.from_expr(expression)
        except (ValueError, TypeError, SyntaxError) as exc:
            raise AssignmentError(f'Cannot read "{text}" in {self!r}: {exc}')

    def variables_of(self, value):
        if not self.is_symbolic:
            return set()
        used = set()
        for poly in (value.numer, value.denom):
            for monom in poly.monoms():
                used.update(name for name, exponent in zip(self.table.names, monom) if exponent)
        return used

    # Evaluation at rational points

    def substitute(self, value, assignment):
        """
        Exact value of ``value`` at a rational assignment, as a QQ element.
        """
        if not self.is_symbolic:
            return value
        needed = self.variables_of(value)
        missing = sorted(needed - set(assignment))
        if missing:
            raise AssignmentError(
                f'Assignment does not cover {", ".join(missing)}',
                details={'missing': missing},
            )
        point = {name: Fraction(str(assignment[name])) for name in needed}
        numerator = self._evaluate_poly(value.numer, point)
        denominator = self._evaluate_poly(value.denom, point)
        if denominator == 0:
            offending = {name: format_rational(point[name]) for name in sorted(point)}
            raise SubstitutionPoleError(
                f'Denominator {self._format_poly(value.denom)} vanishes at {offending}',
                details={'assignment': offending},
            )
        return numerator / denominator

    def _evaluate_poly(self, poly, point):
        ring = self.domain.ring.clone(domain=QQ)
        values = [
            QQ(point[name].numerator, point[name].denominator) if name in point else QQ.zero
            for name in self.table.names
        ]
        return poly.set_ring(ring)(*values)

    def specialize(self, value, numeric_field):
        return self.substitute(value, numeric_field.assignment)

    def assignment_strings(self):
        if self.assignment is None:
            return None
        return {name: format_rational(value) for name, value in self.assignment.items()}
