"""
Verification serializers.
"""

from rest_framework import serializers

from core.validators import validate_rank
from field.elements import VarTable
from field.serializers import AssignmentSerializer
from .reports import MODES
from .services import CHECK_NAMES


class CheckReportSerializer(serializers.Serializer):
    """
    Serializer for check reports; the outcome is exposed under ``pass``.
    """
    check = serializers.CharField()
    N = serializers.IntegerField(source='rank', allow_null=True)
    mode = serializers.ChoiceField(choices=MODES)
    witness = serializers.DictField(allow_null=True)
    millis = serializers.IntegerField(min_value=0)
    assignments = serializers.ListField(child=serializers.DictField(), allow_null=True)
    details = serializers.DictField(allow_null=True)

    def get_fields(self):
        fields = super().get_fields()
        fields['pass'] = serializers.BooleanField(source='passed')
        return fields


class CheckRequestSerializer(serializers.Serializer):
    """
    Serializer for check requests.
    """
    checks = serializers.ListField(
        child=serializers.ChoiceField(choices=CHECK_NAMES + ('all',)),
        min_length=1,
    )
    N = serializers.IntegerField(validators=[validate_rank])
    assignment = serializers.DictField(required=False)
    samples = serializers.IntegerField(min_value=1, required=False)
    symbolic = serializers.BooleanField(default=False)

    def validate_assignment(self, value):
        serializer = AssignmentSerializer(data=value)
        serializer.is_valid(raise_exception=True)
        return serializer.validated_data

    def validate(self, attrs):
        """
        An explicit assignment covers every variable of the rank.
        """
        assignment = attrs.get('assignment')
        if assignment is not None:
            missing = [name for name in VarTable.for_rank(attrs['N']) if name not in assignment]
            if missing:
                raise serializers.ValidationError({'assignment': f'Missing variables: {", ".join(missing)}.'})
        return attrs
