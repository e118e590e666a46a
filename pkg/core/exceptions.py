"""
Domain errors and the API exception handler.

Every failure the engine can raise derives from ``RMatrixError`` and
carries a stable ``error_code``. Identity checks never raise: a failing
check is a report with a witness.
"""

from rest_framework.views import exception_handler
from rest_framework import status
from rest_framework.response import Response


def custom_exception_handler(exc, context):
    """
    Custom exception handler that returns consistent error responses.
    """
    if isinstance(exc, RMatrixError):
        return Response(
            {
                'success': False,
                'message': exc.message,
                'errors': exc.details,
                'error_code': exc.error_code,
            },
            status=status.HTTP_400_BAD_REQUEST,
        )

    # Call REST framework's default exception handler first
    response = exception_handler(exc, context)

    if response is not None:
        error_data = {
            'success': False,
            'message': 'An error occurred',
            'errors': {}
        }

        if hasattr(exc, 'detail'):
            if isinstance(exc.detail, dict):
                error_data['errors'] = exc.detail
                if 'non_field_errors' in exc.detail:
                    error_data['message'] = exc.detail['non_field_errors'][0]
                else:
                    error_data['message'] = 'Validation failed'
            elif isinstance(exc.detail, list):
                error_data['message'] = exc.detail[0]
            else:
                error_data['message'] = str(exc.detail)

        if response.status_code == status.HTTP_404_NOT_FOUND:
            error_data['message'] = 'Resource not found'
            error_data['error_code'] = 'NOT_FOUND'
        elif response.status_code == status.HTTP_405_METHOD_NOT_ALLOWED:
            error_data['error_code'] = 'METHOD_NOT_ALLOWED'
        elif response.status_code == status.HTTP_400_BAD_REQUEST:
            error_data['error_code'] = 'BAD_REQUEST'
        elif response.status_code == status.HTTP_500_INTERNAL_SERVER_ERROR:
            error_data['message'] = 'Internal server error'
            error_data['error_code'] = 'INTERNAL_ERROR'

        response.data = error_data

    return response


class RMatrixError(Exception):
    """
    Base class for engine errors.
    """
    default_message = 'R-matrix engine error'
    default_code = 'RMATRIX_ERROR'

    def __init__(self, message=None, error_code=None, details=None):
        self.message = message or self.default_message
        self.error_code = error_code or self.default_code
        self.details = details or {}
        super().__init__(self.message)


class DivisionByZeroError(RMatrixError):
    default_message = 'Division by zero in the coefficient field'
    default_code = 'DIVISION_BY_ZERO'


class DegenerateQNumberError(RMatrixError):
    """
    Raised for q-numbers with base 1, which have no finite value.
    """
    default_message = 'q-number base must differ from 1'
    default_code = 'DEGENERATE_Q_NUMBER'


class SubstitutionPoleError(RMatrixError):
    """
    Raised when a denominator vanishes at a rational assignment.
    """
    default_message = 'Denominator vanishes at the assignment'
    default_code = 'SUBSTITUTION_POLE'


class AssignmentError(RMatrixError):
    default_message = 'Invalid variable assignment'
    default_code = 'INVALID_ASSIGNMENT'


class DimensionMismatchError(RMatrixError):
    default_message = 'Matrix dimensions are incompatible'
    default_code = 'DIMENSION_MISMATCH'


class LegIndexError(RMatrixError):
    default_message = 'Leg indices out of range'
    default_code = 'LEG_INDEX'


class SingularMatrixError(RMatrixError):
    default_message = 'Matrix is singular'
    default_code = 'SINGULAR_MATRIX'


class NotNilpotentError(RMatrixError):
    """
    Raised when a q-exponential argument has a nonzero power past the
    dimension bound.
    """
    default_message = 'argument not nilpotent'
    default_code = 'NOT_NILPOTENT'


class FractionalExponentError(RMatrixError):
    default_message = 'Exponent is not an integer power of s'
    default_code = 'FRACTIONAL_EXPONENT'


class FactorizationMismatchError(RMatrixError):
    """
    Raised when the ordered root product disagrees with the direct R-matrix.
    """
    default_message = 'Factorized R-matrix differs from the direct form'
    default_code = 'FACTORIZATION_MISMATCH'


class InconsistentParameterSystemError(RMatrixError):
    default_message = 'Parameter equations have no common solution'
    default_code = 'INCONSISTENT_PARAMETERS'


class IncompatibleTwistError(RMatrixError):
    default_message = 'Twist elements are built for different ranks or fields'
    default_code = 'INCOMPATIBLE_TWIST'


class TwistFormatError(RMatrixError):
    default_message = 'Malformed twist element document'
    default_code = 'TWIST_FORMAT'


class UnknownCheckError(RMatrixError):
    default_message = 'Unknown or inapplicable check'
    default_code = 'UNKNOWN_CHECK'
