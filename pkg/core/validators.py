"""
Reusable validators for input validation.
"""

from fractions import Fraction
import re

from django.core.exceptions import ValidationError


# Variable names produced by VarTable: s, mu<k>, a<i>_<k>, b<i>, plus the gl(3) reference p, nu
VARIABLE_NAME_PATTERN = r'^(s|p|nu|mu[1-9]\d*|b[1-9]\d*|a[1-9]\d*_[1-9]\d*)$'

# Twist parameters that appear with negative exponents
INVERTIBLE_NAME_PATTERN = r'^(b[1-9]\d*|a[1-9]\d*_[1-9]\d*)$'

# Integers or p/q with an optional sign
RATIONAL_PATTERN = r'^[+-]?\d+(/[1-9]\d*)?$'


def validate_rank(rank):
    """
    Validate the twist rank N.
    """
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 1:
        raise ValidationError('N must be a positive integer.')


def validate_dimension(dimension):
    """
    Validate a gl(n) dimension.
    """
    if not isinstance(dimension, int) or isinstance(dimension, bool) or dimension < 2:
        raise ValidationError('n must be an integer of at least 2.')


def validate_variable_name(name):
    """
    Validate a coefficient-field variable name.
    """
    if not re.match(VARIABLE_NAME_PATTERN, name):
        raise ValidationError(f'Unknown variable name "{name}".')


def validate_rational_string(value):
    """
    Validate an exact rational written as "p" or "p/q".
    """
    if not isinstance(value, str) or not re.match(RATIONAL_PATTERN, value.strip()):
        raise ValidationError(f'"{value}" is not an exact rational such as "3" or "-5/7".')


def parse_rational(value):
    validate_rational_string(value)
    return Fraction(value.strip())


class AssignmentValidator:
    """
    Validator for rational variable assignments.
    """

    @staticmethod
    def validate_assignment_data(data, required_names=None):
        """
        Validate a whole assignment mapping at once.
        """
        errors = {}

        if not isinstance(data, dict):
            raise ValidationError('Assignment must be a JSON object of variable names to rationals.')

        for name, value in data.items():
            try:
                validate_variable_name(name)
                parse_rational(value)
            except ValidationError as e:
                errors[name] = e.messages[0]

        if 's' in data and 's' not in errors:
            if parse_rational(data['s']) in (0, 1, -1):
                errors['s'] = 's must avoid 0, 1 and -1.'

        for name, value in data.items():
            if name not in errors and re.match(INVERTIBLE_NAME_PATTERN, name) and parse_rational(value) == 0:
                errors[name] = f'{name} must be nonzero.'

        for name in required_names or ():
            if name not in data:
                errors[name] = 'This variable is required.'

        if errors:
            raise ValidationError(errors)

        return True
