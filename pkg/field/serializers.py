"""
Assignment serializers for rational parameter files.
"""

from fractions import Fraction

from django.core.exceptions import ValidationError as DjangoValidationError
from rest_framework import serializers

from core.validators import AssignmentValidator
from .elements import format_rational


class AssignmentSerializer(serializers.Serializer):
    """
    Serializer for assignment objects such as {"s": "2", "mu1": "3"}.

    Integers are accepted in place of rational strings.
    """

    def __init__(self, *args, required_names=None, **kwargs):
        self.required_names = tuple(required_names or ())
        super().__init__(*args, **kwargs)

    def to_internal_value(self, data):
        if isinstance(data, dict):
            data = {
                name: str(value) if isinstance(value, int) and not isinstance(value, bool) else value
                for name, value in data.items()
            }
        try:
            AssignmentValidator.validate_assignment_data(data, self.required_names)
        except DjangoValidationError as e:
            if hasattr(e, 'error_dict'):
                raise serializers.ValidationError(
                    {name: messages for name, messages in e.message_dict.items()}
                )
            raise serializers.ValidationError({'non_field_errors': e.messages})
        return {name: Fraction(value.strip()) for name, value in data.items()}

    def to_representation(self, instance):
        return {name: format_rational(value) for name, value in sorted(instance.items())}
