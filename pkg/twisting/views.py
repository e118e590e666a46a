"""
Matrix views for the standard and esoteric R-matrices.
"""

from rest_framework import permissions, serializers, status
from rest_framework.views import APIView

from core.responses import StandardResponse
from core.validators import validate_dimension, validate_rank
from field.elements import Field, VarTable
from linalg.serializers import MatrixSerializer
from .rmatrix import r_standard_direct, r_standard_factorized
from .services import esoteric_r_matrix


class StandardQuerySerializer(serializers.Serializer):
    n = serializers.IntegerField(validators=[validate_dimension])
    factorized = serializers.BooleanField(default=False)


class EsotericQuerySerializer(serializers.Serializer):
    N = serializers.IntegerField(validators=[validate_rank])


class StandardRMatrixView(APIView):
    """
    API view for the standard R-matrix of gl(n).
    """
    permission_classes = [permissions.AllowAny]

    def get(self, request):
        """
        Return R_S on V (x) V, optionally through the root factorization.
        """
        query = StandardQuerySerializer(data=request.query_params)
        if not query.is_valid():
            return StandardResponse.error(
                message="Invalid query parameters",
                errors=query.errors,
                status_code=status.HTTP_400_BAD_REQUEST
            )

        n = query.validated_data['n']
        field = Field(VarTable(('s',)))
        builder = r_standard_factorized if query.validated_data['factorized'] else r_standard_direct
        return StandardResponse.success(
            data=MatrixSerializer(builder(n, field)).data,
            message="Standard R-matrix generated successfully"
        )


class EsotericRMatrixView(APIView):
    """
    API view for the symbolic esoteric R-matrix R_FG.
    """
    permission_classes = [permissions.AllowAny]

    def get(self, request):
        query = EsotericQuerySerializer(data=request.query_params)
        if not query.is_valid():
            return StandardResponse.error(
                message="Invalid query parameters",
                errors=query.errors,
                status_code=status.HTTP_400_BAD_REQUEST
            )

        matrix = esoteric_r_matrix(query.validated_data['N'])
        return StandardResponse.success(
            data=MatrixSerializer(matrix).data,
            message="Esoteric R-matrix generated successfully"
        )
