"""
Matrix JSON serializers.

Format: {"dim": d, "entries": [[row, col, "<canonical string>"], ...]} with
1-based indices, entries sorted by (row, col).
"""

from rest_framework import serializers

from core.exceptions import RMatrixError
from .sparse import SparseMatrix


class MatrixSerializer(serializers.Serializer):
    """
    Serializer for sparse matrices over a coefficient field.
    """
    dim = serializers.IntegerField(min_value=1)
    entries = serializers.ListField(
        child=serializers.ListField(min_length=3, max_length=3),
    )

    def __init__(self, *args, field=None, **kwargs):
        self.coefficient_field = field
        super().__init__(*args, **kwargs)

    def to_representation(self, instance):
        field = self.coefficient_field or instance.field
        return {
            'dim': instance.dim,
            'entries': [
                [row + 1, col + 1, field.canonical_string(value)]
                for (row, col), value in instance.entries()
            ],
        }

    def validate(self, attrs):
        """
        Check index ranges and value types.
        """
        dim = attrs['dim']
        seen = set()
        for entry in attrs['entries']:
            row, col, value = entry
            if not isinstance(row, int) or not isinstance(col, int) or not (1 <= row <= dim and 1 <= col <= dim):
                raise serializers.ValidationError({'entries': f'Index pair ({row}, {col}) outside 1..{dim}.'})
            if not isinstance(value, str):
                raise serializers.ValidationError({'entries': f'Entry ({row}, {col}) must be a canonical string.'})
            if (row, col) in seen:
                raise serializers.ValidationError({'entries': f'Entry ({row}, {col}) appears twice.'})
            seen.add((row, col))
        return attrs

    def create(self, validated_data):
        if self.coefficient_field is None:
            raise serializers.ValidationError('A coefficient field is required to read matrices.')
        field = self.coefficient_field
        try:
            return SparseMatrix.from_entries(
                field,
                validated_data['dim'],
                (((row - 1, col - 1), field.parse(value)) for row, col, value in validated_data['entries']),
            )
        except RMatrixError as e:
            raise serializers.ValidationError({'entries': e.message})
