"""
Verification views.
"""

from rest_framework import permissions, status
from rest_framework.views import APIView

from core.responses import StandardResponse
from .serializers import CheckReportSerializer, CheckRequestSerializer
from .services import VerificationService


class CheckRunView(APIView):
    """
    API view running identity checks.
    """
    permission_classes = [permissions.AllowAny]

    def post(self, request):
        """
        Run the requested checks; domain errors reach the exception handler.
        """
        serializer = CheckRequestSerializer(data=request.data)
        if not serializer.is_valid():
            return StandardResponse.error(
                message="Check request is invalid",
                errors=serializer.errors,
                status_code=status.HTTP_400_BAD_REQUEST
            )

        data = serializer.validated_data
        service = VerificationService(
            data['N'],
            assignment=data.get('assignment'),
            samples=data.get('samples'),
            symbolic=data['symbolic'],
        )
        reports = service.run(data['checks'])
        return StandardResponse.report(CheckReportSerializer(reports, many=True).data)
